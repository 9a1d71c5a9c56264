"""Tabulated reference values for R = 4, B = {0, 2}, L = {0, p}.

``JP_TABLE[p] = (Delta(2 m_L), non-trivial extreme L-cycles)``.
"""

JP_TABLE = {
    1: (0.645591, ()),
    3: (0.572511, ((1,),)),
    5: (0.977119, ()),
    7: (0.92037, ()),
    9: (0.799365, ((3,),)),
    11: (0.876405, ()),
    13: (0.857008, ()),
    15: (0.596433, ((1, 4), (5,))),
    17: (1.04887, ()),
    19: (0.879154, ()),
    21: (0.967384, ((7,),)),
    23: (1.0163, ()),
    25: (0.943818, ()),
    27: (0.921974, ((9,),)),
    29: (1.00966, ()),
}

JP_R = 4
JP_B = (0, 2)
