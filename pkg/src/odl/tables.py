"""Reference data for the verification suites.

Polynomial reference values are kept as text and parsed on demand; every
numeric entry is an exact integer.  Out-of-scope rows carry a skip reason
instead of expected values.
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# closed forms for the three-form locus class and its Todd pushforward
# ---------------------------------------------------------------------------

# coefficient of H^j (j = 5..0) in the top Chern class of the rank-10
# quotient bundle on P(E), in the Chern classes e_i of the rank-6 bundle E
CTOP_H_BLOCKS = {
    5: "e1*(e1^4 + e2^2 + 2*e1*e3 - 4*e4)",
    4: "e1*(e1^5 + e1^3*e2 + 2*e1*e2^2 + e1^2*e3 - e2*e3 - 6*e1*e4 + 2*e5)",
    3: ("e1*(2*e1^4*e2 + 2*e1^2*e2^2 + e2^3 - e1^3*e3 - e1*e2*e3"
        " + e3^2 - 4*e1^2*e4 - 4*e2*e4 + 4*e1*e5 - 4*e6)"),
    2: ("e1*(2*e1^3*e2^2 + e1*e2^3 + e1^4*e3 - 3*e1^2*e2*e3 + 3*e1*e3^2"
        " - 3*e1^3*e4 - 3*e1*e2*e4 - 2*e3*e4 + 3*e1^2*e5 + e2*e5 - 8*e1*e6)"),
    1: ("e1*(e1^2*e2^3 + e1^3*e2*e3 - e1*e2^2*e3 - e1^2*e3^2 - 4*e1^2*e2*e4"
        " + e2^2*e4 + 5*e1*e3*e4 - 4*e4^2 + e1^3*e5 + e3*e5 - 6*e1^2*e6 - 2*e2*e6)"),
    0: ("e6*(-3*e1^4 - e2^2 - 4*e1*e3 + 4*e4)"
        " + e5*(e1^5 - e1^3*e2 + 3*e1^2*e3 + e2*e3 - 2*e1*e4 - e5)"
        " + e4*(-e1^4*e2 + e1^3*e3 + e1*e2*e3 - e3^2 - e1^2*e4)"
        " + e3*(e1^3*e2^2 - 2*e1^2*e2*e3 + e1*e3^2)"),
}

# degree-5 class of the locus, as the e-polynomial and as the Schur-basis
# expansion of its degree-4 cofactor (the e1 prefactor is split off)
CLASS_E_POLY = "e1*(e1^4 + e2^2 + 2*e1*e3 - 4*e4)"
CLASS_SCHUR_COFACTOR = {(4,): 1, (3, 1): 3, (2, 2): 3, (2, 1, 1): 6}

# degree-9 part of the pushed-forward Todd class of a four-dimensional
# locus, in the Chern classes of E (e_i) and of the base tangent (t_i)
TODD_PUSHFORWARD = """
e1*e6*(601/180*e1^2 - 1/12*e2 - 5/4*e1*t1 + 1/12*t1^2 + 1/12*t2)
+ e1*e5*(-101/180*e1^3 + 11/360*e1*e2 - 1/40*e3 + 5/24*e1^2*t1 - 1/72*e1*t1^2 - 1/72*e1*t2)
+ e1*e4*(-311/36*e1^4 + 787/360*e1^2*e2 - 1/18*e2^2 - 1/72*e1*e3 + 145/24*e1^3*t1
         - 5/6*e1*e2*t1 - 79/72*e1^2*t1^2 + 1/18*e2*t1^2 + 1/180*t1^4 - 79/72*e1^2*t2
         + 1/18*e2*t2 + 5/12*e1*t1*t2 - 1/45*t1^2*t2 - 1/60*t2^2 - 1/180*t1*t3
         + 1/180*t4 + 1/45*e4)
+ e1*e3*(81/20*e1^5 - 1/60*e1*e2^2 - 35/12*e1^4*t1 + 13/24*e1^3*t1^2 - 1/360*e1*t1^4
         + 13/24*e1^3*t2 - 5/24*e1^2*t1*t2 + 1/90*e1*t1^2*t2 + 1/120*e1*t2^2
         + 1/360*e1*t1*t3 - 1/360*e1*t4 - 97/120*e1^2*e3 + 1/30*e2*e3 + 5/16*e1*e3*t1
         - 1/48*e3*t1^2 - 1/48*e3*t2)
+ e1*e2*(81/40*e1^4*e2 - 35/24*e1^3*e2*t1 + 13/48*e1^2*e2*t1^2 - 1/720*e2*t1^4
         + 13/48*e1^2*e2*t2 - 5/48*e1*e2*t1*t2 + 1/180*e2*t1^2*t2 + 1/240*e2*t2^2
         + 1/720*e2*t1*t3 - 1/720*e2*t4 - 97/180*e1^2*e2^2 + 5/24*e1*e2^2*t1
         - 1/72*e2^2*t1^2 - 1/72*e2^2*t2 + 1/80*e2^3)
+ e1^5*(-1/720*t1^4 + 1/180*t1^2*t2 + 1/240*t2^2 + 1/720*t1*t3 - 1/720*t4
        - 5/48*e1*t1*t2 + 5/18*e1^2*t1^2 + 5/18*e1^2*t2 - 25/16*e1^3*t1 + 331/144*e1^4)
"""

# ---------------------------------------------------------------------------
# direct-image tables for the P(E) fibration (pairs q -> partitions)
# ---------------------------------------------------------------------------

# R^q theta_* ( wedge^i (dual W) (x) G ) for W the rank-10 quotient bundle;
# entries are (i, q, nu, multiplicity), labelling S_nu applied to dual E
PUSHFORWARD_O = [
    (0, 0, (0, 0, 0, 0, 0, 0), 1),
    (3, 2, (2, 2, 2, 1, 1, 1), 1),
    (4, 2, (3, 2, 2, 2, 2, 1), 1),
    (6, 3, (4, 3, 3, 3, 3, 2), 1),
    (7, 3, (4, 4, 4, 3, 3, 3), 1),
    (10, 5, (5, 5, 5, 5, 5, 5), 1),
]

PUSHFORWARD_W = [
    (1, 1, (1, 1, 1, 1, 1, 1), 1),
    (2, 2, (2, 2, 2, 2, 1, 0), 1),
    (2, 2, (2, 2, 2, 1, 1, 1), 1),
    (3, 2, (2, 2, 2, 2, 2, 2), 1),
    (3, 2, (3, 3, 2, 2, 1, 1), 1),
    (3, 2, (3, 2, 2, 2, 2, 1), 2),
    (4, 2, (4, 3, 2, 2, 2, 2), 1),
    (4, 3, (3, 3, 3, 3, 3, 0), 1),
    (5, 3, (4, 4, 3, 3, 3, 1), 1),
    (5, 3, (5, 3, 3, 3, 2, 2), 1),
    (5, 3, (4, 3, 3, 3, 3, 2), 2),
    (6, 3, (4, 4, 4, 3, 3, 3), 1),
    (6, 3, (5, 4, 4, 3, 3, 2), 1),
    (6, 3, (5, 4, 3, 3, 3, 3), 1),
    (6, 3, (6, 3, 3, 3, 3, 3), 1),
    (7, 3, (5, 5, 5, 3, 3, 3), 1),
    (7, 4, (5, 4, 4, 4, 4, 3), 1),
    (8, 4, (5, 5, 5, 4, 4, 4), 1),
    (8, 4, (6, 5, 4, 4, 4, 4), 1),
    (9, 5, (5, 5, 5, 5, 5, 5), 1),
    (10, 5, (6, 6, 6, 5, 5, 5), 1),
]

PUSHFORWARD_OMEGA = [
    (0, 1, (0, 0, 0, 0, 0, 0), 1),
    (2, 2, (1, 1, 1, 1, 1, 1), 1),
    (2, 2, (2, 1, 1, 1, 1, 0), 1),
    (3, 2, (3, 2, 1, 1, 1, 1), 1),
    (4, 3, (3, 2, 2, 2, 2, 1), 1),
    (5, 3, (4, 3, 2, 2, 2, 2), 1),
    (5, 3, (5, 2, 2, 2, 2, 2), 1),
    (6, 4, (4, 3, 3, 3, 3, 2), 1),
    (7, 4, (4, 4, 4, 3, 3, 3), 1),
    (7, 4, (5, 4, 3, 3, 3, 3), 1),
    (7, 4, (6, 3, 3, 3, 3, 3), 1),
    (9, 5, (5, 5, 5, 4, 4, 4), 1),
    (9, 5, (6, 5, 4, 4, 4, 4), 1),
    (10, 5, (6, 5, 5, 5, 5, 4), 1),
]

# ---------------------------------------------------------------------------
# catalogued constructions: threefolds with trivial canonical class
# ---------------------------------------------------------------------------

# each row: id, ambient flag, cut expressions, E expression, expected
# (h11, h21) where a set means an unresolved interval
TABLE1_ROWS = [
    ("t.1", "Gr(2,7)", ["O(1)", "O(1)"], "dual(U) + 4*O", (2,), (49,)),
    ("t.2", "Gr(2,7)", ["O(1)", "O(1)"], "Q + O", (3, 4), (36, 37)),
    ("t.3", "Gr(3,6)", ["O(1)"], "dual(U) + 3*O", (2,), (38,)),
    ("t.4", "P4xP4", [], "O(1,0) + O(0,1) + 4*O", (3,), (48,)),
    ("t.5", "P4xP4", [], "p1*Q + O(0,1) + O", (4,), (32,)),
]

# fourfolds cut from homogeneous ambients: id, flag, cuts, E, skip reason
TABLE2_ROWS = [
    ("f.1", "P9", [], "2*O(1) + 4*O", None),
    ("f.2", "Gr(2,7)", ["O(2)"], "dual(U) + 4*O", None),
    ("f.3", "Gr(2,7)", ["O(2)"], "Q + O", None),
    ("f.4", "Gr(2,8)", ["O(1)", "O(1)", "O(1)"], "dual(U) + 4*O", None),
    ("f.5", "Gr(2,8)", ["O(1)", "O(1)", "O(1)"], "Q", None),
    ("f.6", "Gr(2,8)", ["sym(dual(U),2)"], "dual(U) + 4*O", None),
    ("f.7", "Gr(2,8)", ["sym(dual(U),2)"], "Q", None),
    ("f.8", "Gr(3,7)", ["wedge(dual(U),2)"], "dual(U) + 3*O", None),
    ("f.9", "Gr(3,7)", ["wedge(dual(U),2)"], "Q + 2*O", None),
    ("f.10", "OGr(2,10)", None, None, "orthogonal Grassmannian ambient (spin bundle cut)"),
    ("f.11", "OGr(2,12)", None, None, "orthogonal Grassmannian ambient (spin bundle cut)"),
]

# fourfolds in rank-five Grassmann fibrations: id, base flag, base cuts,
# F expression, k, skip reason; E is always dual(U) + (6-k)*O relative
TABLE3_ROWS = [
    ("f.12", "Gr(2,5)", ["sym(dual(U),2)"], "U + 3*O", 2, None),
    ("f.13", "P3", [], "wedge(dual(Q),2) + 2*O", 2, None),
    ("f.14", "P3", [], "O(-1) + O(-1) + 4*O", 2, None),
    ("f.15", "P3", [], "O(-2) + 4*O", 2, None),
    ("f.16", "P4", ["O(3)"], "dual(Q) + O", 2, None),
    ("f.17", "P4", ["O(3)"], "O(-1) + 4*O", 2, None),
    ("f.18", "Bl_pt(P3)", None, None, 2, "blow-up ambient is not modelled"),
    ("f.19", "Bl_pt(P3)", None, None, 2, "blow-up ambient is not modelled"),
    ("f.20", "P2xP2", ["O(1,1)"], "p1*dual(Q) + p2*dual(Q) + O", 2, None),
    ("f.21", "P2xP2", ["O(1,1)"], "p1*dual(Q) + p2*U + 2*O", 2, None),
    ("f.22", "P2xP2", ["O(1,1)"], "p1*U + p2*U + 3*O", 2, None),
    ("f.23", "P2xP2", ["O(1,1)"], "tensor(p1*U, p2*U) + 4*O", 2, None),
    ("f.24", "Gr(2,4)", ["O(2)"], "U + 3*O", 2, None),
    ("f.25", "Gr(2,4)", ["O(2)"], "O(-1) + 4*O", 2, None),
    ("f.26", "Gr(2,5)", ["O(1)", "O(1)", "O(1)"], "dual(Q) + 2*O", 2, None),
    ("f.27", "Gr(2,5)", ["O(1)", "O(1)", "O(1)"], "U + 3*O", 2, None),
    ("f.28", "Gr(2,5)", ["O(1)", "O(1)", "O(1)"], "O(-1) + 4*O", 2, None),
    ("f.29", "P1xP1xP1", [], "p1*U + p2*U + p3*U + 2*O", 2, None),
    ("f.30", "P1xP1xP1", [], "tensor(p1*U, p2*U) + p3*U + 3*O", 2, None),
    ("f.31", "P1xP1xP1", [], "tensor(tensor(p1*U, p2*U), p3*U) + 4*O", 2, None),
    ("f.32", "Gr(2,4)", ["O(1)"], "U + 3*O", 3, None),
    ("f.33", "Gr(2,4)", ["O(1)"], "O(-1) + 4*O", 3, None),
    ("f.34", "P6", ["O(3)"], "O(-1) + 4*O", 4, None),
    ("f.35", "P7", ["O(2)", "O(2)"], "O(-1) + 4*O", 4, None),
    ("f.36", "Gr(2,5)", ["O(1)"], "dual(Q) + 2*O", 4, None),
    ("f.37", "Gr(2,5)", ["O(1)"], "U + 3*O", 4, None),
    ("f.38", "Gr(2,5)", ["O(1)"], "O(-1) + 4*O", 4, None),
]

# ---------------------------------------------------------------------------
# nilpotent-orbit catalogue (all sixteen rows, data only for non type A)
# ---------------------------------------------------------------------------

# id, collapsing space, group, dim G, dim G/P, codim Sing, delta,
# type-A data (e, partition) or None
ORBIT_ROWS = [
    (1, "P1", "SL2", 3, 1, 2, 1, (2, (2,))),
    (2, "P2", "SL3", 8, 2, 4, 1, (3, (2, 1))),
    (3, "P3", "SL4", 15, 3, 6, 1, (4, (2, 1, 1))),
    (4, "P3", "Sp4", 10, 3, 2, 2, None),
    (5, "Q3", "SO5", 10, 3, 2, 1, None),
    (6, "F(1,2)", "SL3", 8, 3, 2, 1, (3, (3,))),
    (7, "P4", "SL5", 24, 4, 8, 1, (5, (2, 1, 1, 1))),
    (8, "Q4", "SL4", 15, 4, 2, 1, (4, (2, 2))),
    (9, "OF(1,2)", "SO5", 10, 4, 2, 1, None),
    (10, "P5", "SL6", 35, 5, 10, 1, (6, (2, 1, 1, 1, 1))),
    (11, "P5", "Sp6", 21, 5, 2, 2, None),
    (12, "Q5", "SO7", 21, 5, 2, 1, None),
    (13, "F(1,2)", "SL4", 15, 5, 2, 1, (4, (3, 1))),
    (14, "F(1,3)", "SL4", 15, 5, 2, 1, (4, (3, 1))),
    (15, "Q5", "G2", 14, 5, 2, 2, None),
    (16, "G2ad", "G2", 14, 5, 2, 1, None),
]

# expected ell_P values as catalogued, for the recomputation check
ORBIT_ELL_P = {1: 1, 2: 4, 3: 9, 4: 4, 5: 4, 6: 2, 7: 16, 8: 7,
               9: 2, 10: 25, 11: 11, 12: 11, 13: 5, 14: 5, 15: 4, 16: 4}

# ---------------------------------------------------------------------------
# nearly-Fano threefolds from nilpotent loci: ambient, bundles, (-K)^3
# ---------------------------------------------------------------------------

# id, orbit id, ambient spec (flag, cuts), E, L, expected (-K)^3, skip reason
TABLE5_ROWS = [
    ("a.1", 1, "P2xP2", [], "2*O", "O(1,1)", 12, None),
    ("a.2", 1, "P2xP2", [], "O + O(1,1)", "O(1,1)", 12, None),
    ("a.3", 1, "P2xP2", [], "O(1,0) + O(0,1)", "O(1,1)", 12, None),
    ("a.4", 1, "Gr(2,5)", ["O(1)", "O(1)"], "2*O", "O(1)", 10, None),
    ("a.5", 1, "Gr(2,5)", ["O(1)", "O(1)"], "O + O(1)", "O(1)", 10, None),
    ("a.6", 1, "Gr(2,5)", ["O(1)", "O(1)"], "dual(U)", "O(1)", 10, None),
    ("a.7", 1, "P6", ["O(2)", "O(2)"], "2*O", "O(1)", 8, None),
    ("a.8", 1, "P6", ["O(2)", "O(2)"], "O + O(1)", "O(1)", 8, None),
    ("a.9", 1, "P5", ["O(3)"], "2*O", "O(1)", 6, None),
    ("a.10", 1, "P5", ["O(3)"], "O + O(1)", "O(1)", 6, None),
    ("a.11", 1, "WP(2,1,1,1,1,1)_4", None, None, None, 4, "weighted projective ambient"),
    ("a.12", 1, "WP(3,2,1,1,1,1)_6", None, None, None, 2, "weighted projective ambient"),
    ("a.13", 5, "P7", None, None, None, 10, "orbit is not of type A"),
    ("a.14", 5, "P7", None, None, None, 8, "orbit is not of type A"),
    ("a.15", 6, "P5", [], "3*O", "O(1)", 6, None),
    ("a.16", 6, "P5", [], "2*O + O(1)", "O(1)", 6, None),
]

# ---------------------------------------------------------------------------
# Fano fourfolds: expected ((-K)^4, chi(Omega^1), chi(Omega^2), h0(-K))
# ---------------------------------------------------------------------------

# forms rows: id, flag, cuts, E; nilpotent rows: id, orbit, ambient, E, L
TABLE6_FORMS_ROWS = [
    ("F.1", "Gr(3,6)", [], "dual(U) + 3*O", (63, -2, 21, 19)),
    ("F.2", "Gr(2,7)", ["O(1)"], "Q + O", (69, -4, 26, 20)),
    ("F.3", "Gr(2,7)", ["O(1)"], "dual(U) + 4*O", (47, -7, 54, 16)),
]

TABLE6_NILP_ROWS = [
    ("F.4", 3, "Q13", "4*O", "O(1)", (40, -18, 114, 15)),
    ("F.5", 7, "P20", "5*O", "O(1)", (70, -6, 46, 21)),
]

# fourfolds with trivial canonical class from nilpotent loci
NILP_FOURFOLD_ROWS = [
    ("n.1", 6, "Gr(2,5)", "3*O", "O(1)"),
    ("n.2", 6, "Gr(2,5)", "2*O + O(-1)", "O(1)"),
    ("n.3", 6, "Gr(2,5)", "U + O", "O(1)"),
    ("n.4", 6, "Gr(2,5)", "U + O(-1)", "O(1)"),
    ("n.5", 6, "Gr(2,5)", "Q", "O(1)"),
    ("n.6", 2, "Gr(2,6)", "3*O", "O(1)"),
    ("n.7", 2, "Gr(2,6)", "2*O + O(-1)", "O(1)"),
    ("n.8", 2, "Gr(2,6)", "U + O", "O(1)"),
    ("n.9", 2, "Gr(2,6)", "U + O(-1)", "O(1)"),
]
