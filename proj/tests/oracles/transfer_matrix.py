"""Reference values from exact piecewise trigonometric transfer matrices.

Every test problem has a piecewise constant potential, so each piece is
propagated in closed form. Run with mpmath at 40 digits:

    python3 tests/oracles/transfer_matrix.py
"""
import mpmath as mp

mp.mp.dps = 40
pi = mp.pi


def prop(length, lam, q):
    k2 = mp.mpf(lam) - q
    if k2 == 0:
        return mp.matrix([[1, length], [0, 1]])
    if k2 < 0:
        k = mp.sqrt(-k2)
        return mp.matrix([[mp.cosh(k * length), mp.sinh(k * length) / k],
                          [k * mp.sinh(k * length), mp.cosh(k * length)]])
    k = mp.sqrt(k2)
    return mp.matrix([[mp.cos(k * length), mp.sin(k * length) / k],
                      [-k * mp.sin(k * length), mp.cos(k * length)]])


class Spec:
    def __init__(self, eps, beta, ap, al, tl, tr, q=(0, 0, 0), a=0, b=None):
        self.a = mp.mpf(a)
        self.b = pi if b is None else mp.mpf(b)
        self.eps = mp.mpf(eps)
        self.beta, self.ap, self.al = beta, ap, al
        self.tl, self.tr = mp.matrix(tl), mp.matrix(tr)
        self.q = [mp.mpf(v) for v in q]
        th = (self.a + self.b) / 2
        self.xm, self.xp = th - self.eps, th + self.eps
        self.d1, self.d2 = mp.det(self.tl), mp.det(self.tr)

    def phi_states(self, lam):
        v0 = mp.matrix([self.beta[1], -self.beta[0]])
        v1 = prop(self.xm - self.a, lam, self.q[0]) * v0
        v2 = self.tl * v1
        v3 = prop(self.xp - self.xm, lam, self.q[1]) * v2
        v4 = self.tr * v3
        v5 = prop(self.b - self.xp, lam, self.q[2]) * v4
        return v0, v1, v2, v3, v4, v5

    def omega(self, lam):
        v = self.phi_states(lam)[-1]
        return ((lam * self.ap[0] + self.al[0]) * v[0]
                - (lam * self.ap[1] + self.al[1]) * v[1]) / (self.d1 * self.d2)

    def phi(self, lam, x):
        st = self.phi_states(lam)
        if x < self.xm:
            return (prop(x - self.a, lam, self.q[0]) * st[0])[0]
        if x < self.xp:
            return (prop(x - self.xm, lam, self.q[1]) * st[2])[0]
        return (prop(x - self.xp, lam, self.q[2]) * st[4])[0]

    def chi(self, lam, x):
        vb = mp.matrix([lam * self.ap[1] + self.al[1], lam * self.ap[0] + self.al[0]])
        if x > self.xp:
            return (prop(x - self.b, lam, self.q[2]) * vb)[0]
        v3 = mp.inverse(self.tr) * (prop(self.xp - self.b, lam, self.q[2]) * vb)
        if x > self.xm:
            return (prop(x - self.xp, lam, self.q[1]) * v3)[0]
        v1 = mp.inverse(self.tl) * (prop(self.xm - self.xp, lam, self.q[1]) * v3)
        return (prop(x - self.xm, lam, self.q[0]) * v1)[0]

    def green(self, lam, x, y):
        lo, hi = min(x, y), max(x, y)
        return self.phi(lam, lo) * self.chi(lam, hi) / self.omega(lam)

    def eigenvalues(self, count, lo=-60, step=mp.mpf(1) / 64):
        out, lam, w = [], mp.mpf(lo), self.omega(lo)
        while len(out) < count:
            nxt = lam + step
            wn = self.omega(nxt)
            if wn == 0:
                # a scan point hit a root; carry the sign it flips to
                out.append(nxt)
                wn = -w
            elif w * wn < 0:
                out.append(mp.findroot(self.omega, (lam, nxt), solver='anderson'))
            lam, w = nxt, wn
        return out


IDENT = [[1, 0], [0, 1]]
TL = [[1, 0.5], [-0.2, 1.1]]
TR = [[0.8, 0.3], [0.1, 1.5]]
QC = (1, -2, 0.5)

P_CONT = Spec(pi / 4, (1, 0), (1, 0), (0, 1), IDENT, IDENT)
P0 = Spec(pi / 4, (1, 0), (1, 0), (0, 1), [[2, 0], [0, 1]], [[1, 0], [0, 3]])
CASES = {
    1: Spec(pi / 6, (1, 1), (1, 1), (-1, 1), TL, TR, QC),
    2: Spec(pi / 6, (1, 1), (1, 0), (0, 1), TL, TR, QC),
    3: Spec(pi / 6, (1, 0), (1, 1), (-1, 1), TL, TR, QC),
    4: Spec(pi / 6, (1, 0), (1, 0), (0, 1), TL, TR, QC),
}
# identity transmissions, constant q = 1 and a mixed right condition
CONT_Q = Spec(0.7, (1, 1), (1, 1), (-1, 1), IDENT, IDENT, (1, 1, 1))


def show(name, values):
    print(name + ' = {' + ', '.join(mp.nstr(v, 17) for v in values) + '};')


if __name__ == '__main__':
    f = lambda s: mp.cos(s * pi) - s * mp.sin(s * pi)
    s_cont = [mp.findroot(f, 0.38)] + [mp.findroot(f, n + 0.3 / n) for n in range(1, 31)]
    show('p_cont_lambda', [s * s for s in s_cont])
    show('p0_lambda', P0.eigenvalues(12))
    show('p0_omega_2', [P0.omega(2)])
    show('p0_green_2', [P0.green(2, mp.mpf(0.5), mp.mpf(2.5))])
    for c, spec in CASES.items():
        show('case%d_lambda' % c, spec.eigenvalues(10))
    show('cont_q_lambda', CONT_Q.eigenvalues(10))
    for eps in ('0.2', '0.4', '0.6', '0.785', '1.0'):
        p = Spec(mp.mpf(eps), (1, 0), (1, 0), (0, 1), [[2, 0], [0, 1]], [[1, 0], [0, 3]])
        show('p0_sweep_' + eps.replace('.', '_'), p.eigenvalues(6))
