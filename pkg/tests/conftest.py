"""Shared frozen test data.

The diagram and letter constants here were transcribed from pictures once
and are asserted against independently computed values in the tests; name
conventions: P/Q/W are the three 2-defect entering states, Pc/Qc the two
closed entering states, primed versions the leaving-side counterparts.
"""

import pytest

from planarloops import (Letter, PointedRing, ZA, ZZ, QQ, parse_diagram,
                         parse_graffito, prime_field)

# --- cell-state building blocks (4 nodes) ---------------------------------
P = parse_diagram("TL(2,4){L1-R1,L2-R2,R3-R4}")
Q = parse_diagram("TL(2,4){L1-R3,L2-R4,R1-R2}")
W = parse_diagram("TL(2,4){L1-R1,L2-R4,R2-R3}")
Pc = parse_diagram("TL(0,4){R1-R2,R3-R4}")
Qc = parse_diagram("TL(0,4){R1-R4,R2-R3}")
Pp = parse_diagram("TL(4,2){L1-R1,L2-L3,L4-R2}")
Qp = parse_diagram("TL(4,2){L1-R1,L2-R2,L3-L4}")
Wp = parse_diagram("TL(4,2){L1-L2,L3-R1,L4-R2}")
Pcp = parse_diagram("TL(4,0){L1-L2,L3-L4}")
Qcp = parse_diagram("TL(4,0){L1-L4,L2-L3}")

# --- letter tables ----------------------------------------------------------
# the twelve letters that can occur in a one-loop divider-free system,
# grouped as (both sides connected, left closed, right closed, both closed)
ONE_LOOP_LETTERS = {
    Letter(a, b) for a, b in [
        (P, Pp), (Q, Pp), (W, Qp), (W, Wp),
        (Pc, Pp), (Qc, Qp), (Qc, Wp),
        (W, Pcp), (P, Qcp), (Q, Qcp),
        (Pc, Qcp), (Qc, Pcp),
    ]
}

# the thirteen letters that meet two distinct loops
PIVOT_LETTERS = {
    Letter(a, b) for a, b in [
        (W, Pp), (P, Qp), (Q, Wp), (Q, Qp), (P, Wp),
        (Qc, Pp), (Pc, Qp), (Pc, Wp),
        (W, Qcp), (P, Pcp), (Q, Pcp),
        (Qc, Qcp), (Pc, Pcp),
    ]
}
LEFT_END_PIVOTS = {Letter(a, b) for a, b in [(Qc, Pp), (Pc, Qp), (Pc, Wp)]}
RIGHT_END_PIVOTS = {Letter(a, b) for a, b in [(W, Qcp), (P, Pcp), (Q, Pcp)]}

# the four letters spanning the two-side-open one-loop row
OPEN_ROW_LETTERS = {Letter(a, b) for a, b in
                    [(P, Pp), (Q, Pp), (W, Qp), (W, Wp)]}

# --- distinguished systems ---------------------------------------------------
PHI_X = parse_graffito("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,0){L1-L4,L2-L3}]")
PHI_XH = parse_graffito("G(cc)[TL(0,4){R1-R4,R2-R3} | TL(4,0){L1-L2,L3-L4}]")
PHI_R = parse_graffito(
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R1,L2-L3,L4-R4,R2-R3}"
    " | TL(4,0){L1-L2,L3-L4}]")

# a degree-3 one-loop system and its three bar deletions, with the loop
# counts each deletion pays for (transcribed from a worked picture)
DEG3_EXAMPLE = parse_graffito(
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"
    " | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4} | TL(4,0){L1-L4,L2-L3}]")
DEG3_FACES = (
    (parse_graffito("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4}"
                    " | TL(4,0){L1-L4,L2-L3}]"), 0),
    (parse_graffito("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R1,L2-L3,L4-R2,R3-R4}"
                    " | TL(4,0){L1-L4,L2-L3}]"), 1),
    (parse_graffito("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"
                    " | TL(4,0){L1-L2,L3-L4}]"), 0),
)

# juxtaposition example: DEG3_EXAMPLE times the one-bar system PHI_XH
PRODUCT_EXAMPLE = parse_graffito(
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"
    " | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4}"
    " | TL(4,4){L1-L4,L2-L3,R1-R4,R2-R3} | TL(4,0){L1-L2,L3-L4}]")

# a seven-bar system passed by three dividers
DIVIDER_EXAMPLE = parse_graffito(
    "G(cc)[TL(0,4){R1-R2,R3-R4}"
    " | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"
    " | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4}"
    " | TL(4,4){L1-L4,L2-L3,R1-R4,R2-R3}"
    " | TL(4,4){L1-L2,L3-L4,R1-R2,R3-R4}"
    " | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4}"
    " | TL(4,4){L1-L2,L3-L4,R1-R2,R3-R4}"
    " | TL(4,0){L1-L2,L3-L4}]")

# a bar deletion that raises the divider count from zero to one
DIVIDER_RAISING = parse_graffito(
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"
    " | TL(4,4){L1-R1,L2-R4,L3-L4,R2-R3} | TL(4,0){L1-L2,L3-L4}]")
DIVIDER_RAISING_TARGET = parse_graffito(
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-L4,L2-L3,R1-R4,R2-R3}"
    " | TL(4,0){L1-L2,L3-L4}]")


@pytest.fixture
def ring_za():
    return PointedRing.make(ZA)


@pytest.fixture
def ring_z0():
    return PointedRing.make(ZZ, 0)


@pytest.fixture
def ring_q0():
    return PointedRing.make(QQ, 0)


@pytest.fixture
def ring_f2():
    return PointedRing.make(prime_field(2), 0)
