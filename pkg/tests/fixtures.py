"""Frozen reference groupings used across the suite.

DEGREE4_NONZERO_WORDS: the six rank-4 words with nonzero degree-4 value.
DEGREE5_VALUE_GROUPS: rank <= 5 words with nonzero degree-5 value, grouped
by equal value (group membership and element orders are basis-independent;
the concrete component vectors are not, so they are not recorded here).
RANK5_CLASS_ROWS: the known move-connected sets of nontrivial rank <= 5
words, pairwise separated by the degree-6 invariant except for the first
row, which splits into UNRESOLVED_SETS.
"""

DEGREE4_NONZERO_WORDS = [
    "ABACDCBD", "ABCACDBD", "ABCADBDC", "ABCBDACD", "ABCDBDAC", "ABCDCADB",
]

UNRESOLVED_SETS = (
    frozenset({"ABCDBEACED", "ABCDECAEBD"}),
    frozenset({"ABCADBECDE", "ABCACDEDBE"}),
)

DEGREE5_VALUE_GROUPS = [
    ['ABACDCBD', 'ABCBDACD', 'ABCDCADB'],
    ['ABACDECBDE', 'ABACDECBED', 'ABACDECDBE', 'ABACDEDCBE',
        'ABCABDEDCE', 'ABCACDEBDE', 'ABCACDEBED', 'ABCADEBDEC',
        'ABCADEBEDC', 'ABCADEDBCE', 'ABCADEDCBE', 'ABCBADEDCE',
        'ABCBDEACDE', 'ABCBDEACED', 'ABCBDEADCE', 'ABCBDEDACE',
        'ABCDABDECE', 'ABCDABECED', 'ABCDACDEBE', 'ABCDACEBED',
        'ABCDADCEBE', 'ABCDADEBCE', 'ABCDADEBEC', 'ABCDADECBE',
        'ABCDAEBCED', 'ABCDAEBECD', 'ABCDAEBEDC', 'ABCDAECBED',
        'ABCDAECEBD', 'ABCDBADECE', 'ABCDBAECED', 'ABCDBCEADE',
        'ABCDBEACDE', 'ABCDBEADCE', 'ABCDBECEAD', 'ABCDCBEADE',
        'ABCDCEABDE', 'ABCDCEADBE', 'ABCDCEADEB', 'ABCDCEBADE',
        'ABCDEBCEAD', 'ABCDEBDEAC', 'ABCDEBEACD', 'ABCDEBEADC',
        'ABCDEBEDAC', 'ABCDECADEB', 'ABCDECAEDB', 'ABCDECBEAD',
        'ABCDECDAEB', 'ABCDECEABD', 'ABCDECEBAD', 'ABCDEDABEC',
        'ABCDEDAEBC', 'ABCDEDAECB', 'ABCDEDBAEC', 'ABCDEDCAEB'],
    ['ABCDEDBEAC'],
    ['ABCDECEADB'],
    ['ABCACDBEDE', 'ABCBDEAECD', 'ABCDCEAEDB', 'ABCDEDACEB'],
    ['ABCADCDEBE'],
    ['ABCADECDBE', 'ABCADEDBEC', 'ABCDBECADE'],
    ['ABCADBEDEC', 'ABCDCEDAEB'],
    ['ABACDBDECE', 'ABACDBECED', 'ABACDCEBED', 'ABACDEDBCE',
        'ABCBDEDCAE', 'ABCDCAEDEB', 'ABCDCEBDAE'],
    ['ABCACDEDBE', 'ABCADBECDE', 'ABCDBEACED', 'ABCDECAEBD'],
    ['ABCBDAECED'],
    ['ABACDCBEDE', 'ABCBDACEDE', 'ABCBDADECE', 'ABCBDECEAD',
        'ABCDADBECE', 'ABCDADECEB', 'ABCDAECEDB'],
    ['ABACDCEDBE'],
    ['ABCDACEDBE', 'ABCDAEBDEC', 'ABCDBDEACE'],
    ['ABCBDCEADE', 'ABCDBEDEAC'],
    ['ABACBDEDCE', 'ABCDCAEBED', 'ABCDCEBEAD', 'ABCDEBECAD'],
    ['ABCDBECAED', 'ABCDEACEBD', 'ABCDEADBEC'],
    ['ABCBDEDAEC'],
    ['ABCADEDCEB'],
    ['ABACDCEBDE', 'ABACDEDBEC', 'ABCADBDECE', 'ABCDBDAECE'],
    ['ABACDBCEDE', 'ABACDBEDEC', 'ABCBDCAEDE'],
    ['ABCDBEADEC', 'ABCDEBDACE', 'ABCDECADBE'],
    ['ABCDBDEAEC'],
    ['ABCDBDECAE'],
    ['ABCBDCEAED', 'ABCDCADEBE'],
    ['ABACBDCEDE', 'ABCADCEDEB', 'ABCADEBDCE', 'ABCBDCEDAE',
        'ABCDACEBDE', 'ABCDAEDBEC', 'ABCDBEDACE', 'ABCDBEDAEC',
        'ABCDEBDAEC', 'ABACBDCD'],
    ['ABCACDBD', 'ABCADBDC', 'ABCDBDAC'],
    ['ABACDECEBD', 'ABCBDAEDEC'],
    ['ABCADBECED', 'ABCADECEBD', 'ABCBDAECDE', 'ABCBDEDCEA',
        'ABCDBDECEA', 'ABCDBECEDA', 'ABCDCAEDBE', 'ABCDCEBDEA',
        'ABCDECEBDA', 'ABCDEDBECA'],
    ['ABCADCEBED', 'ABCADEBECD', 'ABCBDAEDCE', 'ABCDCAEBDE'],
]

RANK5_CLASS_ROWS = [
    ['ABCDBEACED', 'ABCDECAEBD', 'ABCADBECDE', 'ABCACDEDBE'],
    ['ABCBDAEDCE', 'ABCDCAEBDE'],
    ['ABCACDBEDE'],
    ['ABACDCEDBE'],
    ['ABACDCEBED', 'ABCDCAEDEB', 'ABCBDEDCAE', 'ABACDEDBCE',
        'ABCDCEBDAE'],
    ['ABCBDCEAED'],
    ['ABCDECEADB'],
    ['ABCDCEDAEB', 'ABCDEBDACE'],
    ['ABCDEBECAD', 'ABCDCEBEAD', 'ABCDCAEBED'],
    ['ABCADBDECE', 'ABCDBDAECE'],
    ['ABACDCEBDE', 'ABACDEDBEC'],
    ['ABCADCDEBE'],
    ['ABACBDCEDE'],
    ['ABACDBECED', 'ABACDBDECE'],
    ['ABCDBEDEAC', 'ABCDEADBEC'],
    ['ABCBDCEDEA'],
    ['ABACDBCEDE', 'ABCBDCAEDE', 'ABACDBEDEC'],
    ['ABCADCEBED', 'ABCADEBECD'],
    ['ABCADEDCEB'],
    ['ABCBDCEADE', 'ABCBDEDAEC', 'ABCDACEDBE', 'ABCDAEBDEC'],
    ['ABCDEDBECA', 'ABCBDAECDE', 'ABCBDEDCEA', 'ABCDCAEDBE',
        'ABCDCEBDEA'],
    ['ABCDBECAED', 'ABCDBDEACE', 'ABCDEACEBD'],
    ['ABCDBEADEC', 'ABCDECADBE', 'ABCADEDBEC'],
    ['ABCDCADEBE'],
    ['ABCADECDBE', 'ABCADBEDEC', 'ABCDBECADE', 'ABCDBDEAEC'],
    ['ABCADECEBD', 'ABCDBECEDA', 'ABCDECEBDA', 'ABCDBDECEA',
        'ABCADBECED'],
    ['ABACDECEBD'],
    ['ABCDBDECAE'],
    ['ABCBDEAECD', 'ABCDEDACEB', 'ABCDCEAEDB'],
    ['ABACBDEDCE'],
    ['ABCDADECEB', 'ABCDAECEDB', 'ABCBDADECE', 'ABCDADBECE',
        'ABCBDECEAD'],
    ['ABCBDAECED'],
    ['ABCBDAEDEC'],
    ['ABCDEDBEAC'],
    ['ABACDCBEDE', 'ABCBDACEDE'],
    ['ABACDCBD', 'ABCBDACD', 'ABCDCADB'],
    ['ABCACDBD', 'ABCADBDC', 'ABCDBDAC'],
    ['ABACBDCD'],
]
