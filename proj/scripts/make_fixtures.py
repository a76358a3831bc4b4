#!/usr/bin/env python3
"""Generate the fixture corpus and the expected values the tests compare to.

Everything here is computed independently of the C++ library: integral
homology through sympy's invariant factors, fixed sets by a brute-force
vertex scan on a (twice subdivided, when needed) complex, and Lefschetz
numbers by the Hopf trace on the chain level.  Each fixture is checked
against the values it is meant to exhibit before it is written.

    python3 scripts/make_fixtures.py [--out fixtures]
"""

import argparse
import itertools
import json
from pathlib import Path

import networkx as nx
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


# --- complexes --------------------------------------------------------------

def closure(facets):
    out = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            out.update(itertools.combinations(f, k))
    return out


def by_dim(simplices):
    dims = {}
    for s in simplices:
        dims.setdefault(len(s) - 1, []).append(s)
    return {d: sorted(v) for d, v in dims.items()}


def maximal(simplices):
    ss = set(simplices)
    return sorted(s for s in ss if not any(set(s) < set(t) for t in ss if len(t) == len(s) + 1))


def euler(simplices):
    return sum((-1) ** (len(s) - 1) for s in simplices)


def boundary(rows, cols):
    index = {s: i for i, s in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            m[index[s[:i] + s[i + 1:]]][j] += (-1) ** i
    return Matrix(m)


def homology(simplices, reduced=False):
    """[(betti, [torsion...])] per degree over Z."""
    dims = by_dim(simplices)
    top = max(dims)
    ranks, factors = {}, {}
    for k in range(1, top + 1):
        m = boundary(dims[k - 1], dims[k])
        inv = [abs(int(x)) for x in invariant_factors(m, domain=ZZ) if x != 0]
        ranks[k], factors[k] = len(inv), inv
    if reduced:
        ranks[0], factors[0] = 1, [1]
    out = []
    for k in range(top + 1):
        betti = len(dims[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        out.append((betti, sorted(x for x in factors.get(k + 1, []) if x > 1)))
    return out


def is_flag(simplices):
    ss = set(simplices)
    verts = sorted(s[0] for s in ss if len(s) == 1)
    edges = {s for s in ss if len(s) == 2}
    for s in ss:
        for w in verts:
            if w in s:
                continue
            t = tuple(sorted(s + (w,)))
            if t not in ss and all(tuple(sorted((v, w))) in edges for v in s):
                return False
    return True


def subdivide(simplices):
    """Barycentric subdivision; vertex of sigma is labelled by sigma itself."""
    chains = set()
    for f in maximal(simplices):
        for perm in itertools.permutations(f):
            chain = tuple(tuple(sorted(perm[:i + 1])) for i in range(len(perm)))
            chains.add(chain)
    return closure([tuple(sorted(c)) for c in chains])


def relabel(simplices, name):
    return {tuple(sorted(name(v) for v in s)) for s in simplices}


def bary_name(s):
    return "<" + ",".join(s) + ">"


# --- actions ----------------------------------------------------------------

def compose(p, q):  # p after q, as dicts
    return {k: p[q[k]] for k in q}


def group_elements(generators, verts):
    """Closure of (abstract, vertex map) pairs."""
    letters = max((len(a) for a, _ in generators), default=0)
    def full(a, m):
        a = tuple(a) + tuple(range(len(a), letters))
        return (a, tuple(m.get(v, v) for v in verts))
    gens = [full(a, m) for a, m in generators]
    e = (tuple(range(letters)), tuple(verts))
    idx = {v: i for i, v in enumerate(verts)}
    def mul(x, y):
        return (tuple(x[0][i] for i in y[0]), tuple(x[1][idx[v]] for v in y[1]))
    seen, frontier = {e}, [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen), mul, e


def vertex_map(g, verts):
    return dict(zip(verts, g[1]))


def act(m, s):
    return tuple(sorted(m[v] for v in s))


def check_action(simplices, elements, verts):
    ss = set(simplices)
    for g in elements:
        m = vertex_map(g, verts)
        assert all(act(m, s) in ss for s in ss), "element does not preserve the complex"


def is_regular(simplices, maps):
    for m in maps:
        for s in simplices:
            if act(m, s) == s and any(m[v] != v for v in s):
                return False
    return True


def hopf_trace(simplices, m):
    total = 0
    for s in simplices:
        if act(m, s) != s:
            continue
        image = [m[v] for v in s]
        perm = [s.index(v) for v in image]
        inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
        total += (-1) ** (len(s) - 1) * (-1) ** inversions
    return total


def subdivide_maps(simplices, maps):
    sd = subdivide(simplices)
    new_maps = [{s: act(m, s) for s in simplices} for m in maps]
    return sd, new_maps


def subgroups(elements, mul, e):
    found = set()
    for k in range(0, 4):
        for gens in itertools.combinations(elements, k):
            seen, frontier = {e}, [e]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = mul(g, x)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            found.add(frozenset(seen))
    return found


def components(simplices):
    g = nx.Graph()
    for s in simplices:
        if len(s) == 1:
            g.add_node(s[0])
        elif len(s) == 2:
            g.add_edge(*s)
    out = []
    for comp in nx.connected_components(g):
        out.append([s for s in simplices if s[0] in comp])
    return out


def analyse_action(simplices, generators):
    verts = sorted({v for s in simplices for v in s})
    elements, mul, e = group_elements(generators, verts)
    check_action(simplices, elements, verts)
    maps = [vertex_map(g, verts) for g in elements]

    order = {}
    for g in elements:
        x, k = g, 1
        while x != e:
            x, k = mul(x, g), k + 1
        order[g] = k
    lefschetz = sorted([order[g], hopf_trace(simplices, m)] for g, m in zip(elements, maps))

    regular = is_regular(simplices, maps)
    reg, reg_maps = simplices, maps
    if not regular:
        for _ in range(2):
            reg, reg_maps = subdivide_maps(reg, reg_maps)
        assert is_regular(reg, reg_maps)
    position = {g: i for i, g in enumerate(elements)}

    def fixed(h):
        verts_h = {s[0] for s in reg if len(s) == 1 and all(reg_maps[position[g]][s[0]] == s[0] for g in h)}
        return [s for s in reg if set(s) <= verts_h]

    cyclic, comps = [], []
    groups = subgroups(elements, mul, e)
    for h in groups:
        if len(h) == 1:
            continue
        f = fixed(h)
        chis = [euler(c) for c in components(f)]
        comps.extend([len(h), c] for c in chis)
        if any(order[g] == len(h) for g in h):
            cyclic.append([len(h), sum(chis)])
    # Lefschetz of g equals chi of the fixed set of <g>.
    for g, m in zip(elements, maps):
        if g != e:
            assert hopf_trace(simplices, m) == euler(fixed(_powers(g, mul, e)))
    obstructed = any(chi != 0 for _, chi in cyclic)
    if obstructed:
        verdict = "obstructed"
    elif all(chi == 0 for _, chi in comps):
        verdict = "sufficient"
    else:
        verdict = "indeterminate"
    return {
        "group_order": len(elements),
        "regular": regular,
        "verdict": verdict,
        "lefschetz": lefschetz,
        "cyclic_totals": sorted(cyclic),
        "component_chis": sorted(comps),
        "subgroup_count": len(groups),
    }


def _powers(g, mul, e):
    out, x = {e}, g
    while x != e:
        out.add(x)
        x = mul(x, g)
    return out


# --- corpus -----------------------------------------------------------------

def cycle(n):
    return [(str(i), str((i + 1) % n)) for i in range(n)]


def complex_json(simplices, vertices=None):
    verts = vertices or sorted({v for s in simplices for v in s})
    return {"vertices": verts, "facets": [list(f) for f in maximal(simplices)]}


def profile(h, reduced):
    return {"reduced": reduced,
            "degrees": [{"degree": k, "betti": b, "torsion": t} for k, (b, t) in enumerate(h)]}


RP2_6 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
         (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]


def build(out):
    complexes, expected = {}, {"complexes": {}, "actions": {}}

    octa = [(a, b, c) for a in "01" for b in "23" for c in "45"]
    complexes["octahedron"] = closure(octa)
    complexes["hexagon"] = closure(cycle(6))
    complexes["pentagon"] = closure(cycle(5))
    complexes["square"] = closure(cycle(4))
    complexes["triangle_boundary"] = closure(cycle(3))
    complexes["full_triangle"] = closure([("0", "1", "2")])
    complexes["single_edge"] = closure([("a", "b")])
    complexes["two_points"] = closure([("a",), ("b",)])
    rp2 = closure([tuple(str(v) for v in f) for f in RP2_6])
    complexes["rp2_6"] = rp2

    suspension = closure([f + (apex,) for f in maximal(rp2) for apex in ("N", "S")])
    cone_sd = relabel(subdivide(suspension), bary_name)
    complexes["mapping_cone"] = cone_sd

    torus = []
    for i in range(3):
        for j in range(3):
            v = (i, j)
            a, b, c = v, ((i + 1) % 3, j), ((i + 1) % 3, (j + 1) % 3)
            d = (i, (j + 1) % 3)
            torus.append((a, b, c))
            torus.append((a, d, c))
    complexes["torus_9"] = closure([tuple(f"{x}{y}" for x, y in t) for t in torus])

    complexes["indeterminate_graph"] = closure([
        ("x", "p"), ("p", "c"), ("x", "q"), ("q", "c"),
        ("a1", "c"), ("a1", "a2"), ("a2", "c"), ("b1", "c"), ("b1", "b2"), ("b2", "c")])

    # Oracle checks of the values each complex is meant to exhibit.
    h = {name: homology(s) for name, s in complexes.items()}
    assert h["octahedron"] == [(1, []), (0, []), (1, [])]
    assert h["rp2_6"] == [(1, []), (0, [2]), (0, [])]
    assert h["torus_9"] == [(1, []), (2, []), (1, [])]
    assert homology(suspension, reduced=True) == [(0, []), (0, []), (0, [2]), (0, [])]
    assert is_flag(cone_sd) and euler(cone_sd) == euler(suspension)
    assert h["indeterminate_graph"] == [(1, []), (3, [])]

    for name, s in complexes.items():
        verts = None
        if name == "two_points":
            verts = ["a", "b"]
        (out / "complexes").mkdir(parents=True, exist_ok=True)
        (out / "complexes" / f"{name}.json").write_text(json.dumps(complex_json(s, verts), indent=1) + "\n")
        hz = homology(suspension) if name == "mapping_cone" else h[name]
        hr = homology(suspension, reduced=True) if name == "mapping_cone" else homology(s, reduced=True)
        expected["complexes"][name] = {
            "f_vector": [len(v) for _, v in sorted(by_dim(s).items())],
            "euler": euler(s),
            "flag": is_flag(s),
            "homology": profile(hz, False),
            "reduced_homology": profile(hr, True),
        }

    def ref(name):
        return f"../complexes/{name}.json"

    def rot(n, k=1):
        return {str(i): str((i + k) % n) for i in range(n)}

    def refl(n, shift=0):
        return {str(i): str((shift - i) % n) for i in range(n)}

    def cyc(n):
        return list(range(1, n)) + [0]

    actions = {
        "hexagon_reflection": ("hexagon", [("s", [], refl(6))]),
        "hexagon_rotation": ("hexagon", [("r", [], rot(6))]),
        "hexagon_rotation_z3": ("hexagon", [("r", [], rot(6, 2))]),
        "hexagon_trivial_z3": ("hexagon", [("c", cyc(3), {})]),
        "hexagon_dihedral": ("hexagon", [("r", [], rot(6)), ("s", [], refl(6))]),
        "pentagon_trivial_z2": ("pentagon", [("c", cyc(2), {})]),
        "pentagon_trivial_z3": ("pentagon", [("c", cyc(3), {})]),
        "pentagon_trivial_z5": ("pentagon", [("c", cyc(5), {})]),
        "torus_z3": ("torus_9", [("m", [], {f"{x}{y}": f"{(-y) % 3}{(x - y) % 3}" for x in range(3) for y in range(3)})]),
        "octahedron_half_turn": ("octahedron", [("h", [], {"0": "1", "1": "0", "2": "3", "3": "2"})]),
        "octahedron_antipodal": ("octahedron", [("a", [], {"0": "1", "1": "0", "2": "3", "3": "2", "4": "5", "5": "4"})]),
        "octahedron_klein": ("octahedron", [("h", [], {"0": "1", "1": "0", "2": "3", "3": "2"}),
                                            ("p", [], {"4": "5", "5": "4"})]),
        "triangle_s3": ("triangle_boundary", [("r", [], rot(3)), ("t", [], {"0": "1", "1": "0"})]),
        "square_half_turn": ("square", [("a", [], rot(4, 2))]),
        "square_edge_reflection": ("square", [("s", [], refl(4, 1))]),
        "indeterminate_1": ("indeterminate_graph", [("w", [], {"p": "q", "q": "p"})]),
    }
    (out / "actions").mkdir(parents=True, exist_ok=True)
    for name, (cname, gens) in actions.items():
        doc = {"complex": ref(cname), "generators": []}
        for gname, abstract, mapping in gens:
            g = {"name": gname, "map": {k: v for k, v in mapping.items() if k != v}}
            if abstract:
                g["abstract"] = abstract
            doc["generators"].append(g)
        (out / "actions" / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        expected["actions"][name] = analyse_action(sorted(complexes[cname]), [(a, m) for _, a, m in gens])

    a = expected["actions"]
    assert a["hexagon_reflection"]["verdict"] == "obstructed" and a["hexagon_reflection"]["cyclic_totals"] == [[2, 2]]
    assert a["torus_z3"]["cyclic_totals"] == [[3, 3]]
    for n in ("2", "3", "5"):
        assert a["pentagon_trivial_z" + n]["verdict"] == "sufficient"
    assert a["indeterminate_1"]["verdict"] == "indeterminate"
    assert sorted(c for _, c in a["indeterminate_1"]["component_chis"]) == [-1, 1]

    mirrored = {
        "pentagon_disk": (closure([("c", str(i), str((i + 1) % 5)) for i in range(5)]), cycle(5)),
        "interval_one_mirror": (closure([("a", "b")]), [("a",)]),
        "interval_two_mirrors": (closure([("a", "b")]), [("a",), ("b",)]),
    }
    (out / "mirrored").mkdir(parents=True, exist_ok=True)
    for name, (space, boundary_facets) in mirrored.items():
        doc = complex_json(space)
        doc["boundary_facets"] = [list(f) for f in boundary_facets]
        (out / "mirrored" / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")

    groups = {"z2": {"catalog": "Z2"}, "z3": {"catalog": "Z3"}, "z4": {"catalog": "Z4"},
              "klein": {"generators": [[1, 0, 2, 3], [0, 1, 3, 2]]}, "s3": {"catalog": "S3"},
              "q8": {"catalog": "Q8"}, "d6": {"catalog": "D6"}}
    (out / "groups").mkdir(parents=True, exist_ok=True)
    for name, doc in groups.items():
        (out / "groups" / f"{name}.json").write_text(json.dumps(doc) + "\n")

    (out / "expected.json").write_text(json.dumps(expected, indent=1, sort_keys=True) + "\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = parser.parse_args()
    build(Path(args.out))


if __name__ == "__main__":
    main()
