from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CongruenceReport:
    """One checked congruence ``lhs == rhs (mod q**modulus_power)``.

    ``lhs`` and ``rhs`` are stored already reduced into ``[0, q**e)``.
    When ``preconditions_met`` is false the congruence is reported but not
    asserted; ``reason`` says which hypothesis failed.
    """

    label: str
    q: int
    modulus_power: int
    lhs: int
    rhs: int
    holds: bool
    preconditions_met: bool = True
    reason: str = ""
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def build(
        cls,
        label: str,
        q: int,
        e: int,
        lhs: int,
        rhs: int,
        *,
        preconditions_met: bool = True,
        reason: str = "",
        details: dict[str, Any] | None = None,
    ) -> "CongruenceReport":
        mod = q**e
        lhs, rhs = lhs % mod, rhs % mod
        return cls(
            label, q, e, lhs, rhs, lhs == rhs, preconditions_met, reason, details or {}
        )

    @property
    def modulus(self) -> int:
        return self.q**self.modulus_power

    @property
    def violated(self) -> bool:
        """True only for a failed congruence whose hypotheses all held."""
        return self.preconditions_met and not self.holds
