#!/usr/bin/env python3
"""Generate the bundled FCIDUMP fixtures (STO-3G, restricted Hartree-Fock
molecular orbitals) for small diatomics.

Integrals are computed from scratch with the McMurchie-Davidson scheme
(s and p shells only), followed by an RHF solve and an MO transform.
Output is one FCIDUMP file per (molecule, distance) under data/.

Usage: python3 scripts/gen_fixtures.py [outdir]
"""

import math
import sys
from pathlib import Path

import numpy as np
from scipy.special import hyp1f1

# STO-3G exponents / contraction coefficients (Basis Set Exchange values).
STO3G = {
    "H": [("S", [3.42525091, 0.62391373, 0.16885540],
           [0.15432897, 0.53532814, 0.44463454])],
    "He": [("S", [6.36242139, 1.15892300, 0.31364979],
            [0.15432897, 0.53532814, 0.44463454])],
    "Li": [("S", [16.1195750, 2.9362007, 0.7946505],
            [0.15432897, 0.53532814, 0.44463454]),
           ("SP", [0.6362897, 0.1478601, 0.0480887],
            [-0.09996723, 0.39951283, 0.70011547],
            [0.15591627, 0.60768372, 0.39195739])],
}
CHARGES = {"H": 1, "He": 2, "Li": 3}
ANGSTROM_TO_BOHR = 1.0 / 0.52917721092


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_coefs(la, lb, ab, a, b):
    """1D Hermite expansion table E[i][j][t] for angular momenta up to la, lb."""
    p = a + b
    mu = a * b / p
    E = np.zeros((la + 1, lb + 1, la + lb + 2))
    E[0, 0, 0] = math.exp(-mu * ab * ab)
    xpa = -b * ab / p   # P - A with A at origin shifted by ab = A - B
    xpb = a * ab / p    # P - B
    for i in range(la + 1):
        for j in range(lb + 1):
            if i == 0 and j == 0:
                continue
            if j == 0:
                for t in range(i + j + 1):
                    E[i, j, t] = ((E[i - 1, j, t - 1] / (2 * p) if t > 0 else 0.0)
                                  + xpa * E[i - 1, j, t]
                                  + (t + 1) * E[i - 1, j, t + 1])
            else:
                for t in range(i + j + 1):
                    E[i, j, t] = ((E[i, j - 1, t - 1] / (2 * p) if t > 0 else 0.0)
                                  + xpb * E[i, j - 1, t]
                                  + (t + 1) * E[i, j - 1, t + 1])
    return E


def hermite_integrals(tmax, umax, vmax, p, PC):
    """Auxiliary R_{tuv} table built by downward recursion on the Boys index."""
    R = np.zeros((tmax + 1, umax + 1, vmax + 1))
    x = p * float(np.dot(PC, PC))
    nmax = tmax + umax + vmax
    F = [boys(n, x) for n in range(nmax + 1)]
    Rn = np.zeros((nmax + 1, tmax + 2, umax + 2, vmax + 2))
    for n in range(nmax + 1):
        Rn[n, 0, 0, 0] = (-2.0 * p) ** n * F[n]
    for total in range(1, nmax + 1):
        for t in range(min(total, tmax + 1) + 1):
            for u in range(min(total - t, umax + 1) + 1):
                v = total - t - u
                if v < 0 or v > vmax + 1:
                    continue
                for n in range(nmax - total + 1):
                    if t > 0:
                        val = PC[0] * Rn[n + 1, t - 1, u, v]
                        if t > 1:
                            val += (t - 1) * Rn[n + 1, t - 2, u, v]
                    elif u > 0:
                        val = PC[1] * Rn[n + 1, t, u - 1, v]
                        if u > 1:
                            val += (u - 1) * Rn[n + 1, t, u - 2, v]
                    else:
                        val = PC[2] * Rn[n + 1, t, u, v - 1]
                        if v > 1:
                            val += (v - 1) * Rn[n + 1, t, u, v - 2]
                    Rn[n, t, u, v] = val
    return Rn[0, :tmax + 1, :umax + 1, :vmax + 1]


class Primitive:
    def __init__(self, alpha, lmn, center):
        self.alpha = alpha
        self.lmn = lmn
        self.center = np.asarray(center, dtype=float)
        l, m, n = lmn
        self.norm = ((2 * alpha / math.pi) ** 0.75
                     * (4 * alpha) ** ((l + m + n) / 2.0)
                     / math.sqrt(dfact(2 * l - 1) * dfact(2 * m - 1) * dfact(2 * n - 1)))


def dfact(n):
    return 1 if n <= 1 else n * dfact(n - 2)


def overlap_1d(E, i, j):
    return E[i, j, 0]


def prim_overlap(pa, pb):
    p = pa.alpha + pb.alpha
    AB = pa.center - pb.center
    val = 1.0
    for d in range(3):
        E = hermite_coefs(pa.lmn[d], pb.lmn[d], AB[d], pa.alpha, pb.alpha)
        val *= overlap_1d(E, pa.lmn[d], pb.lmn[d])
    return val * (math.pi / p) ** 1.5


def prim_kinetic(pa, pb):
    b = pb.alpha
    l2 = list(pb.lmn)

    def shifted(delta_d, delta):
        lmn = list(pb.lmn)
        lmn[delta_d] += delta
        if lmn[delta_d] < 0:
            return 0.0
        q = Primitive(pb.alpha, tuple(lmn), pb.center)
        q.norm = 1.0
        return prim_overlap(pa, q)

    val = 0.0
    for d in range(3):
        j = l2[d]
        term = -2.0 * b * b * shifted(d, 2) + b * (2 * j + 1) * shifted(d, 0)
        if j >= 2:
            term -= 0.5 * j * (j - 1) * shifted(d, -2)
        val += term
    return val


def prim_nuclear(pa, pb, C):
    p = pa.alpha + pb.alpha
    AB = pa.center - pb.center
    P = (pa.alpha * pa.center + pb.alpha * pb.center) / p
    Es = [hermite_coefs(pa.lmn[d], pb.lmn[d], AB[d], pa.alpha, pb.alpha) for d in range(3)]
    tmax, umax, vmax = (pa.lmn[d] + pb.lmn[d] for d in range(3))
    R = hermite_integrals(tmax, umax, vmax, p, P - np.asarray(C))
    val = 0.0
    for t in range(tmax + 1):
        for u in range(umax + 1):
            for v in range(vmax + 1):
                val += (Es[0][pa.lmn[0], pb.lmn[0], t]
                        * Es[1][pa.lmn[1], pb.lmn[1], u]
                        * Es[2][pa.lmn[2], pb.lmn[2], v] * R[t, u, v])
    return 2.0 * math.pi / p * val


def prim_eri(pa, pb, pc, pd):
    p = pa.alpha + pb.alpha
    q = pc.alpha + pd.alpha
    alpha = p * q / (p + q)
    P = (pa.alpha * pa.center + pb.alpha * pb.center) / p
    Q = (pc.alpha * pc.center + pd.alpha * pd.center) / q
    Eab = [hermite_coefs(pa.lmn[d], pb.lmn[d], (pa.center - pb.center)[d], pa.alpha, pb.alpha)
           for d in range(3)]
    Ecd = [hermite_coefs(pc.lmn[d], pd.lmn[d], (pc.center - pd.center)[d], pc.alpha, pd.alpha)
           for d in range(3)]
    t1 = [pa.lmn[d] + pb.lmn[d] for d in range(3)]
    t2 = [pc.lmn[d] + pd.lmn[d] for d in range(3)]
    R = hermite_integrals(t1[0] + t2[0], t1[1] + t2[1], t1[2] + t2[2], alpha, P - Q)
    val = 0.0
    for t in range(t1[0] + 1):
        for u in range(t1[1] + 1):
            for v in range(t1[2] + 1):
                eab = (Eab[0][pa.lmn[0], pb.lmn[0], t]
                       * Eab[1][pa.lmn[1], pb.lmn[1], u]
                       * Eab[2][pa.lmn[2], pb.lmn[2], v])
                if eab == 0.0:
                    continue
                for tt in range(t2[0] + 1):
                    for uu in range(t2[1] + 1):
                        for vv in range(t2[2] + 1):
                            ecd = (Ecd[0][pc.lmn[0], pd.lmn[0], tt]
                                   * Ecd[1][pc.lmn[1], pd.lmn[1], uu]
                                   * Ecd[2][pc.lmn[2], pd.lmn[2], vv])
                            if ecd == 0.0:
                                continue
                            sign = -1.0 if (tt + uu + vv) % 2 else 1.0
                            val += eab * ecd * sign * R[t + tt, u + uu, v + vv]
    return val * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


class Contracted:
    def __init__(self, prims, coefs):
        self.prims = prims
        self.coefs = list(coefs)
        s = 0.0
        for ci, pi in zip(self.coefs, self.prims):
            for cj, pj in zip(self.coefs, self.prims):
                s += ci * cj * pi.norm * pj.norm * prim_overlap(pi, pj)
        self.scale = 1.0 / math.sqrt(s)


def contract2(f, A, B):
    val = 0.0
    for ca, pa in zip(A.coefs, A.prims):
        for cb, pb in zip(B.coefs, B.prims):
            val += ca * cb * pa.norm * pb.norm * f(pa, pb)
    return val * A.scale * B.scale


def contract4(A, B, C, D):
    val = 0.0
    for ca, pa in zip(A.coefs, A.prims):
        for cb, pb in zip(B.coefs, B.prims):
            for cc, pc in zip(C.coefs, C.prims):
                for cd, pd in zip(D.coefs, D.prims):
                    val += (ca * cb * cc * cd * pa.norm * pb.norm * pc.norm * pd.norm
                            * prim_eri(pa, pb, pc, pd))
    return val * A.scale * B.scale * C.scale * D.scale


def build_basis(atoms):
    basis = []
    for sym, center in atoms:
        for shell in STO3G[sym]:
            if shell[0] == "S":
                _, exps, coefs = shell
                prims = [Primitive(a, (0, 0, 0), center) for a in exps]
                basis.append(Contracted(prims, coefs))
            else:  # SP
                _, exps, scoefs, pcoefs = shell
                basis.append(Contracted([Primitive(a, (0, 0, 0), center) for a in exps], scoefs))
                for lmn in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    basis.append(Contracted([Primitive(a, lmn, center) for a in exps], pcoefs))
    return basis


def integrals_ao(atoms):
    basis = build_basis(atoms)
    n = len(basis)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = contract2(prim_overlap, basis[i], basis[j])
            T[i, j] = T[j, i] = contract2(prim_kinetic, basis[i], basis[j])
            v = 0.0
            for sym, center in atoms:
                v -= CHARGES[sym] * contract2(
                    lambda a, b, C=center: prim_nuclear(a, b, C), basis[i], basis[j])
            V[i, j] = V[j, i] = v
    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if (i * (i + 1) // 2 + j) < (k * (k + 1) // 2 + l):
                        continue
                    val = contract4(basis[i], basis[j], basis[k], basis[l])
                    for (a, b) in ((i, j), (j, i)):
                        for (c, d) in ((k, l), (l, k)):
                            eri[a, b, c, d] = eri[c, d, a, b] = val
    return S, T + V, eri


def nuclear_repulsion(atoms):
    e = 0.0
    for i, (si, ci) in enumerate(atoms):
        for j, (sj, cj) in enumerate(atoms):
            if j <= i:
                continue
            r = np.linalg.norm(np.asarray(ci) - np.asarray(cj))
            e += CHARGES[si] * CHARGES[sj] / r
    return e


def rhf(S, hcore, eri, n_elec, max_iter=200, tol=1e-12):
    s_eval, s_evec = np.linalg.eigh(S)
    X = s_evec @ np.diag(s_eval ** -0.5) @ s_evec.T
    nocc = n_elec // 2
    F = hcore
    C = None
    E_old = 0.0
    for _ in range(max_iter):
        Fp = X.T @ F @ X
        _, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        Cocc = C[:, :nocc]
        D = Cocc @ Cocc.T
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = hcore + 2.0 * J - K
        E = np.sum(D * (hcore + F))
        if abs(E - E_old) < tol:
            break
        E_old = E
    return E, C


def mo_integrals(hcore, eri, C):
    h = C.T @ hcore @ C
    g = np.einsum("pi,qj,pqrs,rk,sl->ijkl", C, C, eri, C, C, optimize=True)
    return h, g


def active_space(h, g, e_nuc, n_core, n_active):
    """Fold doubly occupied core orbitals into the scalar and one-body parts."""
    core = range(n_core)
    act = range(n_core, n_core + n_active)
    e_core = e_nuc
    for c in core:
        e_core += 2.0 * h[c, c]
        for cp in core:
            e_core += 2.0 * g[c, c, cp, cp] - g[c, cp, cp, c]
    h_eff = np.zeros((n_active, n_active))
    for i, p in enumerate(act):
        for j, q in enumerate(act):
            v = h[p, q]
            for c in core:
                v += 2.0 * g[p, q, c, c] - g[p, c, c, q]
            h_eff[i, j] = v
    g_act = g[np.ix_(act, act, act, act)].copy()
    return e_core, h_eff, g_act


def write_fcidump(path, norb, nelec, ms2, core, h, g, tol=1e-12):
    lines = [f"&FCI NORB={norb},NELEC={nelec},MS2={ms2},",
             " ORBSYM=" + "1," * norb,
             " ISYM=1,",
             "&END"]

    def emit(val, i, j, k, l):
        lines.append(f"{val:23.16E} {i:3d} {j:3d} {k:3d} {l:3d}")

    seen = set()
    for i in range(norb):
        for j in range(i + 1):
            for k in range(norb):
                for l in range(k + 1):
                    ij, kl = i * (i + 1) // 2 + j, k * (k + 1) // 2 + l
                    if ij < kl or (ij, kl) in seen:
                        continue
                    seen.add((ij, kl))
                    if abs(g[i, j, k, l]) > tol:
                        emit(g[i, j, k, l], i + 1, j + 1, k + 1, l + 1)
    for i in range(norb):
        for j in range(i + 1):
            if abs(h[i, j]) > tol:
                emit(h[i, j], i + 1, j + 1, 0, 0)
    emit(core, 0, 0, 0, 0)
    Path(path).write_text("\n".join(lines) + "\n")


def make_molecule(spec, d_angstrom):
    d = d_angstrom * ANGSTROM_TO_BOHR
    if spec == "h2":
        return [("H", (0, 0, 0)), ("H", (0, 0, d))], 2, 0, None
    if spec == "heh+":
        return [("He", (0, 0, 0)), ("H", (0, 0, d))], 2, 0, None
    if spec == "he2":
        return [("He", (0, 0, 0)), ("He", (0, 0, d))], 4, 0, None
    if spec == "as_lih":
        # CAS(2e, 2o) around the Fermi level; lowest MO frozen into the core.
        return [("Li", (0, 0, 0)), ("H", (0, 0, d))], 4, 0, (1, 2)
    raise ValueError(spec)


def generate(spec, d, outdir):
    atoms, n_elec, ms2, cas = make_molecule(spec, d)
    S, hcore, eri = integrals_ao(atoms)
    e_nuc = nuclear_repulsion(atoms)
    e_hf, C = rhf(S, hcore, eri, n_elec)
    h, g = mo_integrals(hcore, eri, C)
    if cas is None:
        core_energy = e_nuc
        norb = h.shape[0]
        nelec_out = n_elec
    else:
        n_core, n_active = cas
        core_energy, h, g = active_space(h, g, e_nuc, n_core, n_active)
        norb = n_active
        nelec_out = n_elec - 2 * n_core
    name = f"{spec}_{d:.3f}.fcidump"
    write_fcidump(outdir / name, norb, nelec_out, ms2, core_energy, h, g)
    print(f"{name}: E_RHF = {e_hf + e_nuc:.10f} Ha, core = {core_energy:.10f}")


H2_DISTANCES = [0.200, 0.300, 0.350, 0.400, 0.500, 0.600, 0.650, 0.700, 0.735,
                0.800, 0.900, 1.000, 1.100, 1.200, 1.300, 1.400, 1.500, 1.700,
                1.950, 1.975]


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
    outdir.mkdir(parents=True, exist_ok=True)
    for d in H2_DISTANCES:
        generate("h2", d, outdir)
    generate("heh+", 0.775, outdir)
    generate("heh+", 1.000, outdir)
    generate("he2", 1.000, outdir)
    generate("as_lih", 1.600, outdir)


if __name__ == "__main__":
    main()
