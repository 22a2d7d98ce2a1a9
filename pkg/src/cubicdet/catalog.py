"""Published reference data: representative cubics over small fields and
explicit determinantal matrices, kept as plain strings."""

from dataclasses import dataclass, field as dc_field

P100, P010, P001, P101 = "[1:0:0]", "[0:1:0]", "[0:0:1]", "[1:0:1]"


@dataclass(frozen=True)
class Representative:
    q: int
    cubic: str
    points: tuple
    classes: int

    @property
    def field_spec(self):
        return f"q={self.q}"


REPRESENTATIVES = (
    # no representation: a single rational point
    Representative(2, "X^2*Z + X*Z^2 + Y^3 + Y^2*Z + Z^3", (P100,), 0),
    Representative(3, "X^2*Z + Y^3 - Y*Z^2 + Z^3", (P100,), 0),
    Representative(4, "X^2*Z + X*Z^2 + Y^3 + w*Z^3", (P100,), 0),
    # one class
    Representative(2, "X^2*Z + X*Y*Z + Y^3 + Y^2*Z + Y*Z^2", (P100, P001), 1),
    Representative(3, "X^2*Z - Y^3 + Y^2*Z + Y*Z^2", (P100, P001), 1),
    Representative(4, "X^2*Z + w*X*Y*Z + Y^3 + Y^2*Z + w*Y*Z^2", (P100, P001), 1),
    Representative(5, "X^2*Z + Y^3 + 2*Y*Z^2", (P100, P001), 1),
    # two classes
    Representative(2, "X^2*Z + X*Y^2 + Y*Z^2", (P100, P010, P001), 2),
    Representative(2, "X^2*Z + X*Z^2 + Y^3", (P100, P101, P001), 2),
    Representative(3, "X^2*Z + X*Y^2 + Y*Z^2 + 2*X*Y*Z", (P100, P010, P001), 2),
    Representative(3, "X^2*Z - X*Z^2 - X*Y*Z - Y^3", (P100, P101, P001), 2),
    Representative(4, "X^2*Z + X*Y^2 + w*Y*Z^2", (P100, P010, P001), 2),
    Representative(4, "X^2*Z + X*Y^2 + (w+1)*Y*Z^2", (P100, P010, P001), 2),
    Representative(4, "X^2*Z + X*Z^2 + w*Y^3", (P100, P101, P001), 2),
    Representative(4, "X^2*Z + X*Z^2 + (w+1)*Y^3", (P100, P101, P001), 2),
    Representative(5, "X^2*Z + X*Y^2 + Y*Z^2 - 2*X*Y*Z", (P100, P010, P001), 2),
    Representative(5, "X^2*Z - X*Z^2 - 2*X*Y*Z - Y^3", (P100, P101, P001), 2),
    Representative(7, "X^2*Z + X*Y^2 + 3*Y*Z^2", (P100, P010, P001), 2),
    Representative(7, "X^2*Z - X*Z^2 + 3*Y^3", (P100, P101, P001), 2),
)

# orbit counts with n + 1 rational points, n = 0, 1, 2
TABLE = {2: (1, 1, 2), 3: (1, 1, 2), 4: (1, 1, 4), 5: (0, 1, 2), 7: (0, 0, 2)}


@dataclass(frozen=True)
class PrintedMatrix:
    name: str
    field_spec: str
    cubic: str
    point: str
    rows: tuple
    extra: dict = dc_field(default_factory=dict)


PRINTED_MATRICES = (
    PrintedMatrix("F2-[0:1:0]", "q=2", "X^2*Z + X*Y^2 + Y*Z^2", P010,
                  (("0", "Z", "Y"), ("Z", "Y", "X"), ("X", "0", "Y"))),
    PrintedMatrix("F2-[0:0:1]", "q=2", "X^2*Z + X*Y^2 + Y*Z^2", P001,
                  (("0", "Z", "Y"), ("Y", "0", "X"), ("X", "X", "Z"))),
    PrintedMatrix("F5-[0:1:0]", "q=5", "X^2*Z + X*Y^2 + Y*Z^2 - 2*X*Y*Z", P010,
                  (("0", "Z", "-Y"), ("Z", "Y", "X - 2*Y"), ("X", "0", "-Y"))),
    PrintedMatrix("F5-[0:0:1]", "q=5", "X^2*Z + X*Y^2 + Y*Z^2 - 2*X*Y*Z", P001,
                  (("0", "Z", "-Y"), ("Y", "0", "-X"), ("X", "X", "-2*X + Z"))),
)

RATIONAL_MATRICES = (
    PrintedMatrix("fermat", "Q", "X^3 + Y^3 + Z^3", "[3:0:1]",
                  (("-X + 2*Y + Z", "-2*X + Y", "X + Y"),
                   ("X - Y", "X + Z", "-Y"),
                   ("X", "2*X + 3*Y", "-2*Y + Z"))),
    PrintedMatrix("twist17", "Q", "17*X^3 + 289*Y^3 + Z^3", "[867:0:1]",
                  (("3*X - 2*Y + Z", "-34*X + 153*Y", "17*X - 51*Y"),
                   ("1/17*X - 1/17*Y", "-3*X - 4*Y + Z", "4*X + 7*Y"),
                   ("1/17*X + 4/17*Y", "-2*X - Y", "6*Y + Z"))),
)

# a twist with no representation over Q; recorded, not computed
NO_REPRESENTATION_OVER_Q = "2*X^3 + 4*Y^3 + Z^3"
