"""Result records shared by the checking routines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    counterexample: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "counterexample": self.counterexample}


@dataclass(frozen=True)
class CountReport:
    method_a: int
    method_b: int
    agree: bool
    witness: Any = None

    def to_json(self) -> dict:
        return {
            "method_a": self.method_a,
            "method_b": self.method_b,
            "agree": self.agree,
            "witness": self.witness,
        }
