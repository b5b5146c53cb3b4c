"""Shared numerical tolerances and defaults."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    algebraic: float = 1e-10
    differential: float = 1e-6
    hermitian: float = 1e-12
    imaginary: float = 1e-9
    positivity: float = 1e-7
    kahler_like: float = 1e-7
    oracle: float = 1e-6
    ke: float = 1e-6
    fd_step: float = 1e-3

    def with_(self, **kwargs) -> "Tolerances":
        return replace(self, **kwargs)


DEFAULT_TOLERANCES = Tolerances()
