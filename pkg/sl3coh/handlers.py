"""Input handlers for the 'sl3coh'-app."""

from data_plumber_http import Property, Object, Array, String, Integer, Boolean


def get_h2_handler():
    """
    Returns parameterized handler
    """
    return Object(
        properties={
            Property("p", required=True): Integer(),
            Property("weights", required=True): Array(items=String()),
            Property("twist"): Integer(),
            Property("route"): String(),
            Property("explain"): Boolean(),
            Property("strict"): Boolean(),
        },
        accept_only=["p", "weights", "twist", "route", "explain", "strict"]
    ).assemble()


def get_table_handler():
    """
    Returns parameterized handler
    """
    return Object(
        properties={
            Property("p", required=True): Integer(),
            Property("max", name="bound", required=True): Integer(),
            Property("discrepanciesOnly", name="discrepancies_only"):
                Boolean(),
            Property("output"): String(),
        },
        accept_only=["p", "max", "discrepanciesOnly", "output"]
    ).assemble()


def get_crosscheck_handler():
    """
    Returns parameterized handler
    """
    return Object(
        properties={
            Property("primes", required=True): Array(items=Integer()),
            Property("maxLen", name="max_len"): Integer(),
            Property("maxR", name="max_r"): Integer(),
            Property("maxD", name="max_d"): Integer(),
            Property("output"): String(),
        },
        accept_only=["primes", "maxLen", "maxR", "maxD", "output"]
    ).assemble()


def get_linkage_handler():
    """
    Returns parameterized handler
    """
    return Object(
        properties={
            Property("p", required=True): Integer(),
            Property("weight", required=True): String(),
        },
        accept_only=["p", "weight"]
    ).assemble()


def get_ext1_handler():
    """
    Returns parameterized handler
    """
    return Object(
        properties={
            Property("p", required=True): Integer(),
            Property("row"): String(),
            Property("mu"): String(),
            Property("twist"): Integer(),
            Property("scan"): Boolean(),
            Property("maxLen", name="max_len"): Integer(),
        },
        accept_only=["p", "row", "mu", "twist", "scan", "maxLen"]
    ).assemble()


def get_patterns_handler():
    """
    Returns parameterized handler
    """
    return Object(
        properties={
            Property("p", required=True): Integer(),
            Property("maxR", name="max_r"): Integer(),
            Property("includeZero", name="include_zero"): Boolean(),
        },
        accept_only=["p", "maxR", "includeZero"]
    ).assemble()
