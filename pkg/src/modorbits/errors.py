"""Exception types raised across the package."""


class NotSquareFree(ValueError):
    """Raised when a modulus has a repeated prime factor."""

    def __init__(self, n: int, prime: int):
        self.n = n
        self.prime = prime
        super().__init__(f"{n} is not square-free ({prime}² | {n})")


class NotDivisible(ValueError):
    """Raised when c does not divide a^2 + n."""

    def __init__(self, n: int, a: int, c: int):
        self.n, self.a, self.c = n, a, c
        super().__init__(f"{c} does not divide a²+n = {a * a + n} (n={n}, a={a})")


class OutOfDomain(ValueError):
    pass


class ModulusMismatch(ValueError):
    pass


class CapExceeded(RuntimeError):
    """A breadth-first ball outgrew its element budget."""
