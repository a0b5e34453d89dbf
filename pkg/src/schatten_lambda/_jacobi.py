"""Cyclic Jacobi rotation kernels for small dense complex matrices.

Both kernels diagonalize a Hermitian 2x2 pivot block
[[alpha, g*phi], [g*conj(phi), beta]] with the unitary
J = [[c, s], [-conj(phi)*s, conj(phi)*c]], where t = tan(theta) is the
smaller root of t^2 + 2*zeta*t - 1 = 0 and zeta = (beta - alpha) / (2g).
"""

import numpy as np
from numba import njit


@njit(cache=True)
def one_sided_sweeps(b, v, tol, max_sweeps):
    """Orthogonalize the columns of b in place; v accumulates the rotations.

    Stops when every column pair satisfies |<b_i, b_j>| <= tol * |b_i| * |b_j|.
    Returns the number of sweeps performed.
    """
    m, k = b.shape
    for sweep in range(max_sweeps):
        rotations = 0
        for i in range(k - 1):
            for j in range(i + 1, k):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0 + 0.0j
                for r in range(m):
                    bi = b[r, i]
                    bj = b[r, j]
                    alpha += bi.real * bi.real + bi.imag * bi.imag
                    beta += bj.real * bj.real + bj.imag * bj.imag
                    gamma += bi.conjugate() * bj
                g = abs(gamma)
                if g == 0.0 or g * g <= tol * tol * alpha * beta:
                    continue
                rotations += 1
                phi = gamma / g
                zeta = (beta - alpha) / (2.0 * g)
                if zeta >= 0.0:
                    t = 1.0 / (zeta + np.sqrt(1.0 + zeta * zeta))
                else:
                    t = -1.0 / (-zeta + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ps = phi.conjugate() * s
                pc = phi.conjugate() * c
                for r in range(m):
                    bi = b[r, i]
                    bj = b[r, j]
                    b[r, i] = c * bi - ps * bj
                    b[r, j] = s * bi + pc * bj
                for r in range(k):
                    vi = v[r, i]
                    vj = v[r, j]
                    v[r, i] = c * vi - ps * vj
                    v[r, j] = s * vi + pc * vj
        if rotations == 0:
            return sweep + 1
    return max_sweeps


@njit(cache=True)
def hermitian_sweeps(a, v, eps, max_sweeps):
    """Diagonalize Hermitian a in place; v accumulates the eigenvector basis.

    eps is an absolute pivot threshold (caller scales it to the matrix).
    Returns the number of sweeps performed.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g <= eps:
                    continue
                rotations += 1
                app = a[p, p].real
                aqq = a[q, q].real
                phi = apq / g
                zeta = (aqq - app) / (2.0 * g)
                if zeta >= 0.0:
                    t = 1.0 / (zeta + np.sqrt(1.0 + zeta * zeta))
                else:
                    t = -1.0 / (-zeta + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ps = phi.conjugate() * s
                pc = phi.conjugate() * c
                # columns: A <- A J
                for r in range(n):
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = c * arp - ps * arq
                    a[r, q] = s * arp + pc * arq
                # rows: A <- J^H A
                for r in range(n):
                    apr = a[p, r]
                    aqr = a[q, r]
                    a[p, r] = c * apr - (phi * s) * aqr
                    a[q, r] = s * apr + (phi * c) * aqr
                a[p, q] = 0.0 + 0.0j
                a[q, p] = 0.0 + 0.0j
                a[p, p] = complex(a[p, p].real, 0.0)
                a[q, q] = complex(a[q, q].real, 0.0)
                for r in range(n):
                    vp = v[r, p]
                    vq = v[r, q]
                    v[r, p] = c * vp - ps * vq
                    v[r, q] = s * vp + pc * vq
        if rotations == 0:
            return sweep + 1
    return max_sweeps
