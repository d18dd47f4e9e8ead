"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of validity of a model or formula."""


class ModelValidityWarning(UserWarning):
    """A formula was evaluated outside the regime where it is a good model."""


class BranchResidualWarning(RuntimeWarning):
    """A closed-form cubic root kept a non-negligible imaginary residue."""
