"""2x2 integer matrices; the basic currency of word matrices and PSL(2,Z)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(1, 0, 0, 1)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def norm(self) -> int:
        """max(|c|, |d|) of the bottom row."""
        return max(abs(self.c), abs(self.d))
