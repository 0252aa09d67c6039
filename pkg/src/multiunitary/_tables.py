"""Embedded matrix data.

Exponent tables list integers modulo q with ``.`` standing for 0; sign tables
use ``+``, ``-`` and ``.``; symbolic tables are whitespace separated monomials
parsed by :func:`multiunitary.catalog._monomial`.
"""

# self-R-dual Butson matrix, q = 3
B9_SELFDUAL = """
. . . . . . . . .
. . . 1 1 1 2 2 2
. . . 2 2 2 1 1 1
. 1 2 . 1 2 . 1 2
. 1 2 1 2 . 2 . 1
. 1 2 2 . 1 1 2 .
. 2 1 . 2 1 . 2 1
. 2 1 1 . 2 2 1 .
. 2 1 2 1 . 1 . 2
"""

# its 2-unitary conjugate dressing D B D^dagger, q = 3
C9 = """
. . . . 2 1 . 1 2
. . . 1 . 2 2 . 1
. . . 2 1 . 1 2 .
. 1 2 . . . . 2 1
1 2 . 2 2 2 . 2 1
2 . 1 1 1 1 . 2 1
. 2 1 . 1 2 . . .
2 1 . . 1 2 1 1 1
1 . 2 . 1 2 2 2 2
"""

D9_SELFDUAL = (0, 0, 0, 0, 4, 2, 0, 2, 4)  # q = 3

# isolated Butson matrix of order 9, q = 6
B9_0 = """
. . . . . . . . .
. 5 3 2 5 3 2 1 5
. 3 3 . 1 5 4 1 3
. 2 . 2 . 2 4 4 4
. 5 1 . 3 3 4 3 1
. 3 5 2 3 5 2 5 1
. . 2 4 2 . 2 4 4
. 3 3 4 5 1 . 3 1
. 1 5 4 3 3 . 1 3
"""

# B_[1] P_16 from the BH(16, 2) listing, q = 2
B16_1_P16 = """
. . . . . . . . . . . . . . . .
. 1 . 1 1 . 1 . . 1 . 1 1 . 1 .
. 1 1 . 1 . . 1 1 . . 1 . 1 1 .
. . 1 1 . . 1 1 1 1 . . 1 1 . .
. 1 . 1 1 . 1 . 1 . 1 . . 1 . 1
. . . . . . . . 1 1 1 1 1 1 1 1
. . 1 1 . . 1 1 . . 1 1 . . 1 1
. 1 1 . 1 . . 1 . 1 1 . 1 . . 1
. 1 1 . . 1 1 . 1 . . 1 1 . . 1
. . 1 1 1 1 . . 1 1 . . . . 1 1
. . . . 1 1 1 1 . . . . 1 1 1 1
. 1 . 1 . 1 . 1 . 1 . 1 . 1 . 1
. . 1 1 1 1 . . . . 1 1 1 1 . .
. 1 1 . . 1 1 . . 1 1 . . 1 1 .
. 1 . 1 . 1 . 1 1 . 1 . 1 . 1 .
. . . . 1 1 1 1 1 1 1 1 . . . .
"""

# B_[8] from the BH(16, 4) listing, q = 4
B16_8 = """
. . . . . . . . . . . . . . . .
. . . . . . . . 2 2 2 2 2 2 2 2
. . . . 2 2 2 2 . . . . 2 2 2 2
. . . . 2 2 2 2 2 2 2 2 . . . .
. . 2 2 . . 2 2 . . 2 2 . . 2 2
. . 2 2 . . 2 2 2 2 . . 2 2 . .
. . 2 2 2 2 . . . . 2 2 2 2 . .
. . 2 2 2 2 . . 2 2 . . . . 2 2
. 2 . 2 . 2 . 2 . 2 . 2 . 2 . 2
. 2 . 2 . 2 . 2 2 . 2 . 2 . 2 .
. 2 . 2 2 . 2 . . 2 . 2 2 . 2 .
. 2 . 2 2 . 2 . 2 . 2 . . 2 . 2
. 2 2 . . 2 2 . 1 3 3 1 1 3 3 1
. 2 2 . . 2 2 . 3 1 1 3 3 1 1 3
. 2 2 . 2 . . 2 1 3 3 1 3 1 1 3
. 2 2 . 2 . . 2 3 1 1 3 1 3 3 1
"""

# 3-unitary real Hadamard matrix of six qubits
H8 = """
- - - + - + + +
- - - + + - - -
- - + - - + - -
+ + - + - + - -
- + - - - - + -
+ - + + - - + -
+ - - - + + + -
+ - - - - - - +
"""

# orthogonal (up to a factor 2) 2-unitary representative of order 16
O16 = """
+ . . .  . + . .  . . - .  . . . -
. + . .  - . . .  . . . -  . . - .
. . - .  . . . +  - . . .  . - . .
. . . -  . . + .  . + . .  + . . .
. + . .  - . . .  . . . +  . . + .
- . . .  . + . .  . . + .  . . . -
. . . -  . . + .  . - . .  - . . .
. . - .  . . . -  + . . .  . - . .
. . - .  . . . -  - . . .  . + . .
. . . +  . . + .  . - . .  + . . .
- . . .  . - . .  . . - .  . . . -
. - . .  - . . .  . . . -  . . + .
. . . -  . . - .  . - . .  + . . .
. . + .  . . . -  - . . .  . - . .
. + . .  + . . .  . . . -  . . + .
+ . . .  . - . .  . . + .  . . . -
"""

# unity positions per column, 1-based
P9_COLUMNS = (1, 9, 5, 6, 2, 7, 8, 4, 3)
P16_COLUMNS = (1, 16, 6, 11, 15, 2, 12, 5, 8, 9, 3, 14, 10, 7, 13, 4)

# isolated matrix of order 9 in powers of y = (-1 + i sqrt 15) / 4
N9_0 = """
1 1    1    1    1    1    1    1    1
1 y    y^2  -1   -y   y    y^3  y^3  y
1 y^2  y^4  -y   y^2  -y^3 y^4  y^2  1
1 -y^4 -y^3 y^3  -y^3 -y^2 -y^4 -y^2 -1
1 -1   y^2  -1/y 1    1    y    y^2  1/y
1 y^3  -y   -1   y^2  y^3  y    y    y
1 y    1    -1/y y^2  y^2  -1   1    1/y
1 y^4  y^2  -y   y^4  y^2  y^2  -y^3 1
1 y^3  y^4  -y^3 y^4  y^2  y^3  y^2  -1
"""

# 15 x 15 core of the one-parameter 2-unitary family of order 16, b = a^2
T16_1_CORE = """
-1 -ia  a  -a  ia   1   -1   1    -1   -a   ia   1    -1   a   -ia
i  a    -a a   -a   -i  -1   -i   -1   a    -a   i    1    a   -a
1  -1   -1 -1  -1   1   1    1    1    -1   -1   1    1    -1  -1
-1 1    -1 -1  1    -1  1    1/a  i/a  -ia  a    -1/a -i/a ia  -a
1  ia   a  -a  -ia  -1  -1   -i   i    -ia  -a   -i   i    ia  a
-i -a   -a a   a    i   -1   -1   i    ia   -ia  1    -i   ia  -ia
-1 -1   1  1   -1   -1  1    -1/a -i/a -ia  a    1/a  i/a  ia  -a
-i -ib  -b ia  -ia  ia  -ia  i    -1   b    ib   -ia  ia   -ia ia
-1 ia   -a -ia a    -i  -i   -1   1    -a   ia   i    i    -ia a
i  -a   a  ia  ia   -1  -i   i    1    a    -a   -1   -i   -ia -ia
-i ib   b  ia  -ia  -ia ia   i    -1   -b   -ib  ia   -ia  -ia ia
1  1    1  -ia -a   1/a -i/a -1/a i/a  ia   a    -1   -1   -1  -1
-1 -ia  a  -ia a    i   i    -i   -i   ia   -a   -1   1    -a  ia
i  a    -a ia  ia   1   i    -1   -i   -ia  -ia  -i   -1   -a  a
1  -1   -1 -ia -a   -1/a i/a 1/a  -i/a ia   a    -1   -1   1   1
"""

# 2-unitary dressing of F3 x F3 (and of the F9 affine family), q = 3
F33_DL = (0, 1, 1, 1, 1, 0, 0, 2, 0)
F33_DR = (0, 1, 1, 1, 0, 1, 2, 2, 1)
