"""Reference values printed in the source tables (alpha0, knot cs, orbifold / covering cs)."""

# (n, m) -> (alpha0, cs of the knot complement)
TABLE1 = {
    (1, 1): (2.094395102393195, 0.0),
    (2, 1): (2.574140778131840, 0.34402298),
    (3, 1): (2.750685152010280, 0.27786688),
    (4, 1): (2.843209532683532, 0.24222232),
    (2, 2): (2.847642272262783, 0.0),
    (3, 2): (2.942465754372979, 0.42782933),
    (4, 2): (2.990939179603150, 0.38923730),
    (3, 3): (3.007517657179940, 0.0),
    (4, 3): (3.040474611156828, 0.46103929),
    (4, 4): (3.065453796328835, 0.0),
}

# (n, m, k) -> (cs of the orbifold X(2pi/k), cs of the k-fold cyclic cover)
TABLE2 = {
    (2, 1, 3): (0.0875301, 0.26259),
    (2, 1, 4): (0.144925, 0.579699),
    (2, 1, 5): (0.0784576, 0.392288),
    (2, 1, 6): (0.0351571, 0.210943),
    (2, 1, 7): (0.00506505, 0.0354553),
    (2, 1, 8): (0.108039, 0.864313),
    (2, 1, 9): (0.0218112, 0.196301),
    (2, 1, 10): (0.0530574, 0.530574),
    (3, 1, 3): (0.0449535, 0.13486),
    (3, 1, 4): (0.0876043, 0.350417),
    (3, 1, 5): (0.0165337, 0.0826684),
    (3, 1, 6): (0.138167, 0.829004),
    (3, 1, 7): (0.0120078, 0.0840545),
    (3, 1, 8): (0.0430876, 0.3447),
    (3, 1, 9): (0.012125, 0.109125),
    (3, 1, 10): (0.0876213, 0.876213),
    (4, 1, 3): (0.0161266, 0.0483799),
    (4, 1, 4): (0.0536832, 0.214733),
    (4, 1, 5): (0.0817026, 0.408513),
    (4, 1, 6): (0.103012, 0.618074),
    (4, 1, 7): (0.0481239, 0.336867),
    (4, 1, 8): (0.00768503, 0.0614802),
    (4, 1, 9): (0.032221, 0.289989),
    (4, 1, 10): (0.0521232, 0.521232),
    (3, 2, 3): (0.125912, 0.377736),
    (3, 2, 4): (0.192764, 0.771058),
    (3, 2, 5): (0.0360431, 0.180216),
    (3, 2, 6): (0.0996796, 0.598077),
    (3, 2, 7): (0.00284328, 0.0199029),
    (3, 2, 8): (0.0554674, 0.443739),
    (3, 2, 9): (0.0409685, 0.368717),
    (3, 2, 10): (0.0294401, 0.294401),
    (4, 2, 3): (0.098074, 0.294222),
    (4, 2, 4): (0.157843, 0.631371),
    (4, 2, 5): (0.0993608, 0.496804),
    (4, 2, 6): (0.0622858, 0.373715),
    (4, 2, 7): (0.0365103, 0.255572),
    (4, 2, 8): (0.0174882, 0.139906),
    (4, 2, 9): (0.00284881, 0.0256393),
    (4, 2, 10): (0.091224, 0.91224),
    (4, 3, 3): (0.138854, 0.416562),
    (4, 3, 4): (0.214725, 0.858898),
    (4, 3, 5): (0.0628859, 0.31443),
    (4, 3, 6): (0.128841, 0.773046),
    (4, 3, 7): (0.0332457, 0.23272),
    (4, 3, 8): (0.0866094, 0.692875),
    (4, 3, 9): (0.0170324, 0.153291),
    (4, 3, 10): (0.0613865, 0.613865),
}
