import coadjoint as ca


def systems(max_n, families="BCD", min_n=None):
    """All systems of the given families up to max_n, skipping the trivial D_1."""
    out = []
    for fam in families:
        lo = min_n if min_n is not None else (2 if fam == "D" else 1)
        for n in range(lo, max_n + 1):
            out.append(ca.build_system(fam, n))
    return out


def default_primes(rs):
    return [ca.default_prime(rs), 101]
