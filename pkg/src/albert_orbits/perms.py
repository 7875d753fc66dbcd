"""Tiny permutations of {1, 2, 3} with the composition rule (pq)(i) = q(p(i))."""


class Perm:
    __slots__ = ("img",)

    def __init__(self, img):
        self.img = tuple(img)
        if sorted(self.img) != list(range(1, len(self.img) + 1)):
            raise ValueError("not a permutation")

    @classmethod
    def identity(cls, n=3):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, a, b):
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(img)

    def __call__(self, i):
        return self.img[i - 1]

    def mul(self, other):
        """(self * other)(i) = other(self(i))."""
        return Perm(tuple(other(self(i)) for i in range(1, len(self.img) + 1)))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm{self.img}"


def all_perms3():
    import itertools

    return [Perm(p) for p in itertools.permutations((1, 2, 3))]
