"""Exception types shared across the package."""


class BudgetError(Exception):
    """An operation would exceed its configured enumeration/evaluation budget."""


class ConfigError(ValueError):
    """An experiment config failed validation; carries every violation at once."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
