//! Coefficient tables for the degree-24 pair resolvent of two quartics in
//! X^4+sX^2+tX+t form: the resolvent is G1^2 - D*D'*G2^2 with G1 of degree 12
//! and G2 of degree 6 in X.
//!
//! Entry format: table[k] lists the monomials of the X^k coefficient as
//! (i, j, k', l, num, den) meaning (num/den) * s^i t^j s'^k' t'^l. The tables
//! were derived from the defining product over all 24 root matchings by exact
//! interpolation and are locked against the numeric oracle in the test suite.

pub(crate) const G1_COEFFS: &[&[(u8, u8, u8, u8, i64, i64)]] = &[
    &[
        (0, 3, 0, 4, 64, 1),
        (0, 3, 1, 3, -1024, 1),
        (0, 3, 2, 2, 4096, 1),
        (0, 3, 3, 2, 256, 1),
        (0, 3, 4, 1, -2048, 1),
        (0, 3, 6, 0, 256, 1),
        (0, 4, 0, 3, 64, 1),
        (0, 4, 0, 4, -27, 2),
        (0, 4, 1, 3, -72, 1),
        (0, 4, 2, 2, -720, 1),
        (0, 4, 3, 2, -270, 1),
        (0, 4, 4, 1, 540, 1),
        (0, 4, 6, 0, -27, 1),
        (1, 3, 0, 3, -1024, 1),
        (1, 3, 0, 4, -72, 1),
        (1, 3, 1, 3, -704, 1),
        (1, 3, 2, 2, 4864, 1),
        (1, 3, 3, 2, 1008, 1),
        (1, 3, 4, 1, -1728, 1),
        (1, 3, 6, 0, 144, 1),
        (2, 2, 0, 3, 4096, 1),
        (2, 2, 0, 4, -720, 1),
        (2, 2, 1, 3, 4864, 1),
        (2, 2, 2, 2, -4096, 1),
        (2, 2, 3, 2, -704, 1),
        (2, 2, 4, 1, 1280, 1),
        (2, 2, 6, 0, -128, 1),
        (3, 2, 0, 3, 256, 1),
        (3, 2, 0, 4, -270, 1),
        (3, 2, 1, 3, 1008, 1),
        (3, 2, 2, 2, -704, 1),
        (3, 2, 3, 2, -76, 1),
        (3, 2, 4, 1, 176, 1),
        (3, 2, 6, 0, -4, 1),
        (4, 1, 0, 3, -2048, 1),
        (4, 1, 0, 4, 540, 1),
        (4, 1, 1, 3, -1728, 1),
        (4, 1, 2, 2, 1280, 1),
        (4, 1, 3, 2, 176, 1),
        (4, 1, 4, 1, -256, 1),
        (4, 1, 6, 0, 16, 1),
        (6, 0, 0, 3, 256, 1),
        (6, 0, 0, 4, -27, 1),
        (6, 0, 1, 3, 144, 1),
        (6, 0, 2, 2, -128, 1),
        (6, 0, 3, 2, -4, 1),
        (6, 0, 4, 1, 16, 1),
    ],
    &[
        (0, 3, 0, 3, -2048, 1),
        (0, 3, 1, 3, 1024, 1),
        (0, 3, 2, 2, -3072, 1),
        (0, 3, 4, 1, -1152, 1),
        (1, 3, 0, 3, 1024, 1),
        (1, 3, 1, 3, 672, 1),
        (1, 3, 2, 2, -2304, 1),
        (2, 2, 0, 3, -3072, 1),
        (2, 2, 1, 3, -2304, 1),
        (2, 2, 2, 2, 5632, 1),
        (2, 2, 4, 1, -192, 1),
        (4, 1, 0, 3, -1152, 1),
        (4, 1, 2, 2, -192, 1),
        (4, 1, 4, 1, -8, 1),
    ],
    &[
        (0, 3, 0, 3, 1616, 1),
        (0, 3, 1, 2, -2944, 1),
        (0, 3, 2, 2, 540, 1),
        (0, 3, 3, 1, 576, 1),
        (0, 3, 5, 0, -216, 1),
        (1, 2, 0, 3, -2944, 1),
        (1, 2, 1, 2, 7168, 1),
        (1, 2, 2, 2, 2656, 1),
        (1, 2, 3, 1, -2560, 1),
        (1, 2, 5, 0, 192, 1),
        (2, 2, 0, 3, 540, 1),
        (2, 2, 1, 2, 2656, 1),
        (2, 2, 2, 2, 141, 1),
        (2, 2, 3, 1, -336, 1),
        (2, 2, 5, 0, -18, 1),
        (3, 1, 0, 3, 576, 1),
        (3, 1, 1, 2, -2560, 1),
        (3, 1, 2, 2, -336, 1),
        (3, 1, 3, 1, 768, 1),
        (3, 1, 5, 0, -32, 1),
        (5, 0, 0, 3, -216, 1),
        (5, 0, 1, 2, 192, 1),
        (5, 0, 2, 2, -18, 1),
        (5, 0, 3, 1, -32, 1),
        (5, 0, 5, 0, -4, 1),
    ],
    &[
        (0, 3, 0, 3, -296, 1),
        (0, 3, 1, 2, 960, 1),
        (0, 3, 3, 1, 144, 1),
        (1, 2, 0, 3, 960, 1),
        (1, 2, 1, 2, -6656, 1),
        (1, 2, 3, 1, 640, 1),
        (3, 1, 0, 3, 144, 1),
        (3, 1, 1, 2, 640, 1),
        (3, 1, 3, 1, 96, 1),
    ],
    &[
        (0, 2, 0, 2, -3840, 1),
        (0, 2, 1, 2, -1664, 1),
        (0, 2, 2, 1, 2432, 1),
        (0, 2, 4, 0, -112, 1),
        (1, 2, 0, 2, -1664, 1),
        (1, 2, 1, 2, -380, 1),
        (1, 2, 2, 1, -32, 1),
        (1, 2, 4, 0, 48, 1),
        (2, 1, 0, 2, 2432, 1),
        (2, 1, 1, 2, -32, 1),
        (2, 1, 2, 1, -1216, 1),
        (2, 1, 4, 0, 24, 1),
        (4, 0, 0, 2, -112, 1),
        (4, 0, 1, 2, 48, 1),
        (4, 0, 2, 1, 24, 1),
        (4, 0, 4, 0, 17, 1),
    ],
    &[
        (0, 2, 0, 2, 1024, 1),
        (0, 2, 2, 1, -256, 1),
        (2, 1, 0, 2, -256, 1),
        (2, 1, 2, 1, -192, 1),
    ],
    &[
        (0, 2, 0, 2, 57, 1),
        (0, 2, 1, 1, 168, 1),
        (0, 2, 3, 0, -26, 1),
        (1, 1, 0, 2, 168, 1),
        (1, 1, 1, 1, 576, 1),
        (1, 1, 3, 0, -16, 1),
        (3, 0, 0, 2, -26, 1),
        (3, 0, 1, 1, -16, 1),
        (3, 0, 3, 0, -28, 1),
    ],
    &[(1, 1, 1, 1, 128, 1)],
    &[
        (0, 1, 0, 1, -160, 1),
        (0, 1, 2, 0, 8, 1),
        (2, 0, 0, 1, 8, 1),
        (2, 0, 2, 0, 22, 1),
    ],
    &[(0, 1, 0, 1, -24, 1)],
    &[(1, 0, 1, 0, -8, 1)],
    &[],
    &[(0, 0, 0, 0, 1, 1)],
];

pub(crate) const G2_COEFFS: &[&[(u8, u8, u8, u8, i64, i64)]] = &[
    &[
        (0, 2, 0, 2, -1, 2),
        (0, 2, 1, 1, -4, 1),
        (0, 2, 3, 0, 9, 1),
        (1, 1, 0, 2, -4, 1),
        (1, 1, 1, 1, 32, 1),
        (1, 1, 3, 0, -8, 1),
        (3, 0, 0, 2, 9, 1),
        (3, 0, 1, 1, -8, 1),
        (3, 0, 3, 0, 2, 1),
    ],
    &[(1, 1, 1, 1, -32, 1)],
    &[
        (0, 1, 0, 1, -16, 1),
        (0, 1, 2, 0, 20, 1),
        (2, 0, 0, 1, 20, 1),
        (2, 0, 2, 0, -9, 1),
    ],
    &[(0, 1, 0, 1, 8, 1)],
    &[(1, 0, 1, 0, 12, 1)],
    &[],
    &[(0, 0, 0, 0, -5, 1)],
];
