"""Test module for the cross-check report data models."""

from dcm_common.models.data_model import get_model_serialization_test

from sl3coh.models import (
    Weight, Decomposition, QueryRecord, InstantiatedPattern, PatternFailure,
    PrimeReport, ErrataEntry, ErrataCitation, CrossCheckReport,
)


INSTANCE = InstantiatedPattern(
    2, None, False, True, Decomposition(3, 1, (Weight(0, 1),))
)
ENTRY = ErrataEntry(
    "errata/1", "p=3", Weight(1, 1), "(1.1) x (1,0)^[1]",
    "(1,1) x (1,0)^[1]", "typo", "ext1/p=3/(1,1)/2",
)


test_pattern_failure_json = get_model_serialization_test(
    PatternFailure, (
        ((INSTANCE, 1, Weight(0, 9), 0), {}),
    )
)


test_prime_report_json = get_model_serialization_test(
    PrimeReport, (
        ((3, 9), {}),
        (
            (3, 81),
            {
                "weights": 6561, "positive": 10,
                "discrepancies": [
                    QueryRecord(
                        "h2", 3, weight=Weight(1, 4), route="both",
                        h2_pipeline=0, h2_theorem=1, agree=False,
                        pattern_ids=[3],
                    )
                ],
                "pattern_failures": [
                    PatternFailure(INSTANCE, 0, Weight(0, 3), 2)
                ],
                "multi_dimensional": [Weight(0, 3)],
                "multiple_terms": [],
                "linkage_violations": [Weight(1, 2)],
            },
        ),
    )
)


test_errata_citation_json = get_model_serialization_test(
    ErrataCitation, (
        ((ENTRY, True), {}),
        ((ENTRY, False, 3), {}),
    )
)


test_cross_check_report_json = get_model_serialization_test(
    CrossCheckReport, (
        (({"tables": "1.0.0"},), {}),
        (
            ({"tables": "1.0.0", "primes": [3]},),
            {
                "primes": [PrimeReport(3, 9)],
                "errata": [ErrataCitation(ENTRY, True)],
            },
        ),
    )
)
