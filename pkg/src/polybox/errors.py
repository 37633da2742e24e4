"""Exception hierarchy shared across the library."""

from __future__ import annotations


class PolyboxError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "PolyboxError"


class SpaceMismatch(PolyboxError):
    """Operands live in different box spaces."""

    code = "SpaceMismatch"


class NotDichotomous(PolyboxError):
    """Two boxes (or words) have no complementary coordinate."""

    code = "NotDichotomous"

    def __init__(self, i: int, j: int):
        super().__init__(f"members {i} and {j} are not dichotomous")
        self.i = i
        self.j = j


class NotProper(PolyboxError):
    """A box has a full factor where a proper one is required."""

    code = "NotProper"

    def __init__(self, index: int):
        super().__init__(f"box {index} is not proper")
        self.index = index


class NotAPartition(PolyboxError):
    code = "NotAPartition"


class UnionsOverlap(PolyboxError):
    code = "UnionsOverlap"


class BudgetExceeded(PolyboxError):
    """Instance too large for the configured enumeration budget."""

    code = "BudgetExceeded"


class EvenFactor(PolyboxError):
    """An operation requiring odd factor cardinalities met an even one."""

    code = "EvenFactor"


class NoPartition(PolyboxError):
    code = "NoPartition"


class CriteriaDisagree(PolyboxError):
    """Independent decision routes returned different verdicts (a bug)."""

    code = "CriteriaDisagree"


class GSumExceeds2d(PolyboxError):
    """Overlap sum above 2^d; the word set was not a genome."""

    code = "GSumExceeds2d"


class NoWitness(PolyboxError):
    """No rigidity witness exists although the theorem guarantees one."""

    code = "NoWitness"


class InconsistentOrientation(PolyboxError):
    code = "InconsistentOrientation"


class NotUnique(PolyboxError):
    """A reconstruction admitted more than one completion."""

    code = "NotUnique"


class Incomplete(PolyboxError):
    """A reconstruction found fewer members than required."""

    code = "Incomplete"


class WrongCount(PolyboxError):
    code = "WrongCount"


class CoordOutOfRange(PolyboxError):
    code = "CoordOutOfRange"


class NotTwoExtremal(PolyboxError):
    code = "NotTwoExtremal"


class TheoremViolation(PolyboxError):
    """An identity that must hold failed at runtime (a bug, not bad input)."""

    code = "TheoremViolation"


class InputError(PolyboxError):
    """Malformed document or argument at the CLI boundary."""

    code = "InputError"
