"""Accept/reject certificates with replayable witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Certificate:
    """Outcome of an ordering check.

    On reject, ``rule`` names the violated condition and ``witness`` carries
    the vertices (and their positions in the checked ordering) that violate
    it literally; ``details`` holds rule-specific extras such as the label
    sets involved.
    """

    accepted: bool
    rule: str | None = None
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def accept(cls, **details: Any) -> "Certificate":
        return cls(accepted=True, details=details)

    @classmethod
    def reject(cls, rule: str, vertices: list[int], positions: list[int], **details: Any) -> "Certificate":
        return cls(
            accepted=False,
            rule=rule,
            witness={"vertices": list(vertices), "positions": list(positions)},
            details=details,
        )

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"accepted": self.accepted}
        if not self.accepted:
            out["rule"] = self.rule
            out["witness"] = self.witness
        if self.details:
            out["details"] = {
                k: (list(v) if isinstance(v, tuple) else v) for k, v in self.details.items()
            }
        return out
