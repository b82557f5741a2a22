"""Shared exception types for domain and runtime failures."""


class ExteriorDomainError(ValueError):
    """Field or trajectory evaluation requested at r <= solenoid radius."""


class ModelMismatchError(ValueError):
    """Field model and flux profile (or solenoid parameters) are incompatible."""


class NonDifferentiablePointError(ValueError):
    """Flux derivative requested exactly at a zero-width ramp breakpoint."""


class TrajectoryHitsSolenoidError(RuntimeError):
    """Integrated beam crossed into the solenoid interior."""


class MeetingNotFoundError(RuntimeError):
    """Swept angles never summed to 2*pi within t_max."""


class StepUnderflowError(ValueError):
    """Time step too small to advance the integration clock."""


class InsufficientPointsError(ValueError):
    """Not enough sweep points for a slope estimate."""


class ConfigError(ValueError):
    """Scenario config failed validation; carries every error found."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
