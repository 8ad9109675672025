from collections.abc import Mapping


class FoldSpec:
    """Fold g(v) (default 2m) and list size f(v) (default 7m)."""

    def __init__(
        self,
        m: int,
        g: Mapping[int, int] | None = None,
        f: Mapping[int, int] | None = None,
        default_fold: int | None = None,
        default_size: int | None = None,
    ) -> None:
        assert m >= 1
        self.m = m
        self.default_fold: int = 2 * m if default_fold is None else default_fold
        self.default_size: int = 7 * m if default_size is None else default_size
        self.__g: dict[int, int] = dict(g or {})
        self.__f: dict[int, int] = dict(f or {})
        for v in self.__g.keys() | self.__f.keys():
            assert self.fold(v) <= self.list_size(v), v

    def fold(self, v: int) -> int:
        return self.__g.get(v, self.default_fold)

    def list_size(self, v: int) -> int:
        return self.__f.get(v, self.default_size)

    def __repr__(self) -> str:
        return (
            f"FoldSpec(m={self.m}, g={self.default_fold}, f={self.default_size}, "
            f"overrides={len(self.__g) + len(self.__f)})"
        )
