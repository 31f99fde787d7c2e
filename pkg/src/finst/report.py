"""Validation reports shared by every checker in the package.

A report is either valid (no items), a list of law violations, a list of
structural errors (malformed references, shape mismatches), or a refusal
(a size guard tripped before the check could run).  Items are kept in a
deterministic sorted order so reports compare bit-for-bit across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

VALID = "valid"
VIOLATIONS = "violations"
STRUCTURAL = "structural_error"
REFUSED = "refused"


class SizeGuardExceeded(Exception):
    """Raised when an enumeration would exceed the caller's size guard."""


class InvalidInput(ValueError):
    """Raised by constructors when a documented precondition is broken."""


@dataclass(frozen=True)
class Item:
    location: str
    law: str
    witnesses: tuple[str, ...] = ()
    structural: bool = False

    def key(self):
        return (self.location, self.law, self.witnesses)


@dataclass(frozen=True)
class Report:
    status: str
    items: tuple[Item, ...] = ()
    guard: str = ""

    @property
    def ok(self) -> bool:
        return self.status == VALID

    @staticmethod
    def valid() -> "Report":
        return Report(VALID)

    @staticmethod
    def refusal(guard: str) -> "Report":
        return Report(REFUSED, guard=guard)

    @staticmethod
    def from_items(items) -> "Report":
        items = tuple(sorted(items, key=Item.key))
        if not items:
            return Report(VALID)
        if any(it.structural for it in items):
            return Report(STRUCTURAL, items)
        return Report(VIOLATIONS, items)

    def merged(self, other: "Report") -> "Report":
        if REFUSED in (self.status, other.status):
            guard = self.guard or other.guard
            return Report(REFUSED, guard=guard)
        return Report.from_items(self.items + other.items)

    def lines(self) -> list[str]:
        if self.status == VALID:
            return ["OK (0 violations)"]
        if self.status == REFUSED:
            return [f"REFUSED: {self.guard}"]
        out = [f"{self.status.upper()} ({len(self.items)} items)"]
        for it in self.items:
            w = ", ".join(it.witnesses)
            out.append(f"  {it.location}: {it.law}" + (f" [{w}]" if w else ""))
        return out


def violation(location, law, *witnesses) -> Item:
    return Item(str(location), law, tuple(str(w) for w in witnesses))


def structural(location, law, *witnesses) -> Item:
    return Item(str(location), law, tuple(str(w) for w in witnesses), structural=True)
