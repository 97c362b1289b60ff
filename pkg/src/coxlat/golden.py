"""Exact arithmetic in Z[phi], phi the golden ratio (phi**2 = phi + 1)."""

from __future__ import annotations


class Golden:
    """The number a + b*phi with integer a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    @staticmethod
    def coerce(x) -> "Golden":
        return x if isinstance(x, Golden) else Golden(int(x), 0)

    def __add__(self, other):
        o = Golden.coerce(other)
        return Golden(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Golden(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Golden.coerce(other))

    def __rsub__(self, other):
        return Golden.coerce(other) - self

    def __mul__(self, other):
        o = Golden.coerce(other)
        bd = self.b * o.b
        return Golden(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return isinstance(other, Golden) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def sign(self) -> int:
        # sign of (2a + b) + b*sqrt(5)
        x, y = 2 * self.a + self.b, self.b
        if x >= 0 and y >= 0:
            return 0 if x == 0 and y == 0 else 1
        if x <= 0 and y <= 0:
            return -1
        if x > 0:
            return 1 if x * x > 5 * y * y else -1
        return 1 if 5 * y * y > x * x else -1

    def __float__(self):
        return self.a + self.b * (1 + 5 ** 0.5) / 2

    def __repr__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a}+{self.b}phi"


PHI = Golden(0, 1)


def sign(x) -> int:
    if isinstance(x, Golden):
        return x.sign()
    return (x > 0) - (x < 0)
