"""Brute-force hom dimensions of the oriented diagram categories.

Independent of the C++ engine: legality is phrased through strand orientation
(every strand runs from a 'tail' occurrence to a 'head' occurrence) instead of
colour rules, and matchings are enumerated by itertools permutations.
"""
import itertools

# OB/EN: letter 'b' (•) is an upward strand end, 'w' (∘) downward.
# MO: 'b','B' (•,■) upward; 'w','W' (∘,□) downward; lowercase = V, uppercase = W.

def ends(src, tgt):
    out = []
    for i, l in enumerate(src):
        out.append(("bot", i, l))
    for i, l in enumerate(tgt):
        out.append(("top", i, l))
    return out

def is_tail(e):
    line, _, l = e
    up = l in "bB"
    return (line == "bot") == up

def ok_pair(tail, head, family):
    lt, lh = tail[2], head[2]
    if family in ("OB", "EN"):
        return True
    # MO: a strand may change V -> W only, reading from tail to head.
    vt, vh = lt.islower(), lh.islower()
    return vt == vh or (vt and not vh)

def dim(src, tgt, family, max_dots=0):
    e = ends(src, tgt)
    tails = [x for x in e if is_tail(x)]
    heads = [x for x in e if not is_tail(x)]
    if len(tails) != len(heads):
        return 0
    count = 0
    for perm in itertools.permutations(heads):
        if all(ok_pair(t, h, family) for t, h in zip(tails, perm)):
            count += 1
    if family == "EN":
        k = len(tails)
        # decorations: k strands with total dots <= max_dots
        from math import comb
        count *= comb(max_dots + k, k)
    return count

def seq_dim(src, tgt):
    s, t = len(src), len(tgt)
    n = s + t
    if n % 2:
        return 0
    pos = list(range(n))
    lab = list(src) + list(tgt)
    cyc = [p if p < s else s + (t - 1 - (p - s)) for p in pos]

    def allowed(a, b):
        a, b = min(a, b), max(a, b)
        ba, bb = a < s, b < s
        if ba != bb:
            return lab[a] == lab[b]
        if ba:
            return lab[a] == lab[b] + 1
        return lab[a] + 1 == lab[b]

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for b in rest[1:]:
            r = [x for x in rest if x not in (a, b)]
            for m in matchings(r):
                yield [(a, b)] + m

    def crossing(m):
        for (a, b), (c, d) in itertools.combinations(m, 2):
            a, b = sorted((cyc[a], cyc[b]))
            c, d = sorted((cyc[c], cyc[d]))
            if a < c < b < d or c < a < d < b:
                return True
        return False

    return sum(1 for m in matchings(pos) if all(allowed(a, b) for a, b in m) and not crossing(m))

if __name__ == "__main__":
    cases = [("OB", "bw", "bw"), ("OB", "bbww", "bbww"), ("OB", "bb", "bb"), ("OB", "bbb", "bbb"),
             ("OB", "", "bw"), ("OB", "bw", ""), ("OB", "bwbw", ""), ("OB", "bwb", "b"), ("OB", "wb", "bw"),
             ("MO", "b", "B"), ("MO", "B", "b"), ("MO", "bB", "BB"), ("MO", "bw", "BW"), ("MO", "BW", "bw"),
             ("MO", "bW", ""), ("MO", "", "BW"), ("MO", "bbw", "B"), ("MO", "bbww", "BBWW")]
    for fam, s, t in cases:
        print(fam, repr(s), repr(t), dim(s, t, fam))
    for s, t, d in [("b", "b", 3), ("bb", "bb", 2), ("bw", "", 2)]:
        print("EN", repr(s), repr(t), d, dim(s, t, "EN", d))
    for s, t in [((0, 1), (0, 1)), ((), (0, 1)), ((0, 1), ()), ((0, 2, 1, 1), (0, 1)), ((1, 0), ()),
                 ((0, 1, 0, 1), (0, 1)), ((0, 1, 0, 1), ()), ((1,), (1,)), ((2, 1, 0), (2,))]:
        print("Seq", s, t, seq_dim(s, t))
