"""
Published reference values, typed in by hand. Never regenerate this file from
the code: these are the independent evidence the verifier diffs against.
"""
from fractions import Fraction as F

# number of r x k Baxter matrices for k >= threshold; coefficients descending
POLYNOMIALS = {
    2: {"threshold": 2, "coefficients": [F(1), F(3), F(-4)],
        "text": "k^2 + 3k - 4"},
    3: {"threshold": 3, "coefficients": [F(1, 3), F(3), F(-16, 3), F(2), F(3)],
        "text": "(1/3)k^4 + 3k^3 - (16/3)k^2 + 2k + 3"},
    4: {"threshold": 4,
        "coefficients": [F(1, 18), F(21, 20), F(-5, 18), F(-151, 12), F(443, 9),
                         F(-1012, 15), F(28)],
        "text": "(1/18)k^6 + (21/20)k^5 - (5/18)k^4 - (151/12)k^3 + (443/9)k^2"
                " - (1012/15)k + 28"},
}

# only the three leading coefficients were published for these
LEADING = {
    5: {"threshold": 5, "degree": 8, "coefficients": [F(23, 4032), F(937, 5040), F(853, 1440)]},
    6: {"threshold": 6, "degree": 10,
        "coefficients": [F(361, 907200), F(403, 20160), F(5177, 30240)]},
}

# split by number of extra 1's (total weight k + extra); valid for k >= r
EXTRA_POLYNOMIALS = {
    3: {
        0: [F(1, 3), F(-1), F(2, 3), F(0), F(0)],
        1: [F(4), F(-12), F(15), F(-8)],
        2: [F(6), F(-13), F(11)],
    },
    4: {
        0: [F(1, 18), F(-3, 10), F(2, 9), F(3, 2), F(-77, 18), F(24, 5), F(-2)],
        1: [F(27, 20), F(-47, 6), F(235, 12), F(-157, 6), F(226, 15), F(0)],
        2: [F(22, 3), F(-121, 3), F(335, 3), F(-500, 3), F(106)],
        3: [F(20, 3), F(-32), F(238, 3), F(-76)],
    },
}
