"""Independent brute-force implementations used as test oracles.

Everything here works on dense antisymmetric numpy arrays and full
permutation sums, deliberately sharing no code with the package kernels.
"""
import itertools
import math

import numpy as np


def perm_sign(p):
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p))
              if p[a] > p[b])
    return -1.0 if inv % 2 else 1.0


def dense_from_comps(n, k, comps):
    """Dense antisymmetric array from increasing multi-index components."""
    T = np.zeros((n,) * k) if k else np.array(float(comps[0]))
    if k == 0:
        return T
    for K, v in zip(itertools.combinations(range(n), k), comps):
        for p in itertools.permutations(range(k)):
            idx = tuple(K[i] for i in p)
            T[idx] = perm_sign(p) * v
    return T


def comps_from_dense(n, k, T):
    if k == 0:
        return (float(T),)
    return tuple(float(T[K]) for K in itertools.combinations(range(n), k))


def wedge_dense(n, ka, kb, A, B):
    """(a ^ b) = (ka+kb)! / (ka! kb!) Alt(a x b) by full antisymmetrization."""
    k = ka + kb
    out = np.zeros((n,) * k) if k else np.array(0.0)
    if k == 0:
        return A * B
    for idx in itertools.product(range(n), repeat=k):
        acc = 0.0
        for p in itertools.permutations(range(k)):
            pi = tuple(idx[i] for i in p)
            a_val = A[pi[:ka]] if ka else float(A)
            b_val = B[pi[ka:]] if kb else float(B)
            acc += perm_sign(p) * a_val * b_val
        out[idx] = acc / (math.factorial(ka) * math.factorial(kb))
    return out


def contract_dense(n, kv, kg, V, G):
    """(i_v g)(u) = g(v, u): brute-force index summation."""
    k = kg - kv
    out = np.zeros((n,) * k) if k else np.array(0.0)
    if kv == 0:
        return float(V) * G
    idx_iter = itertools.product(range(n), repeat=k) if k else [()]
    for idx in idx_iter:
        acc = 0.0
        for m in itertools.product(range(n), repeat=kv):
            v_val = V[m]
            g_val = G[tuple(m) + tuple(idx)] if (kv + k) else float(G)
            acc += v_val * g_val
        val = acc / math.factorial(kv)
        if k:
            out[idx] = val
        else:
            out = np.array(val)
    return out


def hodge_dense(n, k, comps, gmat):
    """Full permutation-sum Hodge: gamma*_M = 1/k! gamma^N sqrt|g| eps_NM."""
    g = np.asarray(gmat, dtype=float)
    ginv = np.linalg.inv(g)
    sq = math.sqrt(abs(np.linalg.det(g)))
    T = dense_from_comps(n, k, comps)
    # raise all indices
    up = T
    for slot in range(k):
        up = np.tensordot(ginv, up, axes=([1], [slot]))
        up = np.moveaxis(up, 0, slot)
    eps = np.zeros((n,) * n)
    for p in itertools.permutations(range(n)):
        eps[p] = perm_sign(p)
    out = np.zeros((n,) * (n - k)) if n - k else np.array(0.0)
    for M in itertools.product(range(n), repeat=n - k):
        acc = 0.0
        for N in itertools.product(range(n), repeat=k):
            val = up[N] if k else float(up)
            acc += val * eps[tuple(N) + tuple(M)]
        val = sq * acc / math.factorial(k) if k else sq * acc
        if n - k:
            out[M] = val
        else:
            out = np.array(val)
    return comps_from_dense(n, n - k, out)


def fd_partial(fn, point, axis, h=1e-5):
    """Central finite difference: the independent first-derivative oracle."""
    q1 = list(point)
    q2 = list(point)
    q1[axis] += h
    q2[axis] -= h
    return (fn(q1) - fn(q2)) / (2.0 * h)


def exterior_d_fd(field, point, h=1e-5):
    """Finite-difference exterior derivative of a package Field."""
    from relsplit.exterior import index_pos, multi_indices

    n, k = field.n, field.degree
    pos_in = index_pos(n, k)
    parts = {}
    for la, ax in enumerate(field.axes):
        parts[la] = [fd_partial(lambda p, c=c: field.comps_fn(p)[c],
                                point, ax, h)
                     for c in range(len(multi_indices(n, k)))]
    out = []
    for K in multi_indices(n, k + 1):
        acc = 0.0
        for t_pos, t in enumerate(K):
            rest = K[:t_pos] + K[t_pos + 1:]
            term = parts[t][pos_in[rest]]
            acc += -term if t_pos % 2 else term
        out.append(acc)
    return tuple(out)
