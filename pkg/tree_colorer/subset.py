from collections.abc import Iterable

from error import LemmaViolated


class ConstructionFailed(LemmaViolated):
    """A cardinality the construction relies on does not hold."""


def pick(pool: Iterable[int], size: int, what: str = "subset") -> frozenset[int]:
    """The lexicographically smallest size-subset of pool."""
    ordered = sorted(set(pool))
    if size < 0 or len(ordered) < size:
        raise ConstructionFailed(
            f"{what}: need {size} colors, only {len(ordered)} available"
        )
    return frozenset(ordered[:size])


def pick_preferring(
    preferred: Iterable[int],
    rest: Iterable[int],
    size: int,
    what: str = "subset",
) -> frozenset[int]:
    """Fill a size-subset from preferred first, then from rest."""
    preferred = sorted(set(preferred))
    chosen = preferred[:size]
    if len(chosen) < size:
        chosen += sorted(set(rest) - set(chosen))[: size - len(chosen)]
    if len(chosen) < size:
        raise ConstructionFailed(
            f"{what}: need {size} colors, only {len(chosen)} available"
        )
    return frozenset(chosen)
