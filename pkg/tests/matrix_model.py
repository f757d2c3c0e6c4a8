"""Dc_n as 2x2 complex matrices, used as an arithmetic oracle in tests.

x = diag(z, 1/z) with z = exp(i pi / n) and y = [[0, -1], [1, 0]] satisfy
x^(2n) = 1, y^2 = x^n = -1, y^-1 x y = x^-1, and the representation is faithful.
"""

import numpy as np

from dicyclic import enumerate_group


class MatrixModel:
    def __init__(self, n):
        self.n = n
        z = np.exp(1j * np.pi / n)
        self.x = np.diag([z, 1 / z])
        self.y = np.array([[0, -1], [1, 0]], dtype=complex)
        self.one = np.eye(2, dtype=complex)
        self.elements = enumerate_group(n)
        self.mats = [self.word([("y", g.a), ("x", g.b)]) for g in self.elements]

    def word(self, letters):
        """Evaluate a word given as (generator, integer exponent) pairs."""
        out = self.one
        for gen, k in letters:
            base = self.x if gen == "x" else self.y
            if k < 0:
                base, k = np.linalg.inv(base), -k
            out = out @ np.linalg.matrix_power(base, k)
        return out

    def matrix(self, g):
        return self.mats[g.a * 2 * self.n + g.b]

    def identify(self, mat):
        dists = [np.abs(mat - m).max() for m in self.mats]
        best = int(np.argmin(dists))
        assert dists[best] < 1e-9, "matrix is not a group element"
        assert sorted(dists)[1] > 1e-6, "representation not faithful"
        return self.elements[best]

    def mul(self, g, h):
        return self.identify(self.matrix(g) @ self.matrix(h))

    def inv(self, g):
        return self.identify(np.linalg.inv(self.matrix(g)))
