"""Exception types shared across the package.

Refusal subclasses signal a violated construction hypothesis (CLI exit 2);
AxiomFailure subclasses carry a Report of a failed check (CLI exit 1);
SchemaError covers fixture I/O problems (CLI exit 3).
"""


class PhopfError(Exception):
    pass


class DimensionMismatch(PhopfError):
    pass


class SchemaError(PhopfError):
    pass


class UnresolvedReference(SchemaError):
    pass


class Refusal(PhopfError):
    """A construction refused its input; `hypothesis` names the failed one."""

    def __init__(self, hypothesis, detail=""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class PreconditionFailure(Refusal):
    pass


class InvalidGroupTable(Refusal):
    pass


class MalformedTable(Refusal):
    pass


class NotIdempotent(Refusal):
    pass


class NotCentral(Refusal):
    pass


class NotGlobal(Refusal):
    pass


class NotSymmetric(Refusal):
    pass


class NotACoideal(Refusal):
    pass


class QuotientNotCoalgebra(Refusal):
    pass


class NotAFunctor(Refusal):
    pass


class NotStarInjective(Refusal):
    pass


class ProjectionFailure(Refusal):
    pass


class DegeneratePairing(Refusal):
    pass


class NoSolution(PhopfError):
    pass


class AxiomFailure(PhopfError):
    """An input failed its own axiom checker; carries the offending report."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class ActionAxiomFailure(AxiomFailure):
    pass


class CoactionAxiomFailure(AxiomFailure):
    pass


class PairingAxiomFailure(AxiomFailure):
    pass


class BialgebroidFailure(AxiomFailure):
    pass


class CompatibilityFailure(AxiomFailure):
    pass


class WellDefinednessFailure(AxiomFailure):
    pass


class ComoduleCoalgebraFailure(AxiomFailure):
    pass


class DualStarFailure(AxiomFailure):
    pass
