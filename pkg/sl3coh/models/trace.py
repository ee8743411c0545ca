"""
Trace data-model definition
"""

from typing import Optional
from dataclasses import dataclass, field, replace

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight


@dataclass(frozen=True)
class TraceStep(DataModel):
    """
    A single step of a derivation.

    Keyword arguments:
    term -- evaluated term ('E02', 'E11', 'E20' or 'axiom')
    value -- dimension contributed by this step
    depth -- recursion depth (untwist level)
             (default 0)
    lambda0 -- restricted part used for the evaluation
               (default None)
    row -- identifier of the table row that fired
           (default None)
    family -- identifier of the Ext1 family or Hom target
              (default None)
    errata -- whether the cited row was rewritten by the errata overlay
              (default False)
    note -- free-text remark
            (default None)
    """

    term: str
    value: int
    depth: int = 0
    lambda0: Optional[Weight] = None
    row: Optional[str] = None
    family: Optional[str] = None
    errata: bool = False
    note: Optional[str] = None

    @DataModel.serialization_handler("lambda0")
    @classmethod
    def lambda0_serialization(cls, value):
        """Performs `lambda0`-serialization."""
        if value is None:
            DataModel.skip()
        return value.json

    @DataModel.deserialization_handler("lambda0")
    @classmethod
    def lambda0_deserialization(cls, value):
        """Performs `lambda0`-deserialization."""
        if value is None:
            DataModel.skip()
        return Weight.from_json(value)

    @DataModel.serialization_handler("row")
    @classmethod
    def row_serialization(cls, value):
        """Performs `row`-serialization."""
        if value is None:
            DataModel.skip()
        return value

    @DataModel.serialization_handler("family")
    @classmethod
    def family_serialization(cls, value):
        """Performs `family`-serialization."""
        if value is None:
            DataModel.skip()
        return value

    @DataModel.serialization_handler("note")
    @classmethod
    def note_serialization(cls, value):
        """Performs `note`-serialization."""
        if value is None:
            DataModel.skip()
        return value


@dataclass
class Trace(DataModel):
    """
    Ordered derivation record of a pipeline evaluation.

    Keyword arguments:
    steps -- list of `TraceStep`s
             (default [])
    warnings -- table-consistency warnings
                (default [])
    """

    steps: list[TraceStep] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @DataModel.serialization_handler("steps")
    @classmethod
    def steps_serialization(cls, value):
        """Performs `steps`-serialization."""
        return [step.json for step in value]

    @DataModel.deserialization_handler("steps")
    @classmethod
    def steps_deserialization(cls, value):
        """Performs `steps`-deserialization."""
        return [TraceStep.from_json(step) for step in value]

    @DataModel.serialization_handler("warnings")
    @classmethod
    def warnings_serialization(cls, value):
        """Performs `warnings`-serialization."""
        return list(value)

    @DataModel.deserialization_handler("warnings")
    @classmethod
    def warnings_deserialization(cls, value):
        """Performs `warnings`-deserialization."""
        return list(value)

    def add(self, step: TraceStep) -> None:
        """Appends `step`."""
        self.steps.append(step)

    def extend(self, other: "Trace", depth: int = 0) -> None:
        """
        Appends steps and warnings of `other` with their depth shifted
        by `depth`.
        """
        self.steps.extend(
            replace(step, depth=step.depth + depth) for step in other.steps
        )
        self.warnings.extend(other.warnings)

    def cited_rows(self) -> set[str]:
        """Returns identifiers of all table rows cited in this trace."""
        return {step.row for step in self.steps if step.row is not None} | {
            step.family for step in self.steps if step.family is not None
        }

    @property
    def errata(self) -> bool:
        """Returns `True` if any step cites an overlaid table row."""
        return any(step.errata for step in self.steps)
