//! Published coefficients of the χ₅ decomposition, one row per form:
//! `x₁..x₆` on the six Eisenstein series and `y₁..y₈` on `B₁..B₈`.
//! Each value is `(numerator, denominator)`.

/// One published row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenRow {
    pub number: usize,
    pub form: [u8; 4],
    pub x: [(i64, i64); 6],
    pub y: [(i64, i64); 8],
}

pub const TABLE4: [GoldenRow; 36] = [
    GoldenRow {
        number: 1,
        form: [0, 1, 2, 5],
        x: [(0, 1), (-1, 23), (0, 1), (1, 23), (1, 23), (1, 23)],
        y: [(0, 1), (28, 23), (64, 23), (0, 1), (-64, 23), (312, 23), (128, 23), (56, 23)],
    },
    GoldenRow {
        number: 2,
        form: [0, 1, 4, 3],
        x: [(0, 1), (-2, 23), (0, 1), (2, 23), (1, 23), (1, 23)],
        y: [(0, 1), (12, 23), (128, 23), (0, 1), (-128, 23), (656, 23), (256, 23), (144, 23)],
    },
    GoldenRow {
        number: 3,
        form: [0, 1, 6, 1],
        x: [(0, 1), (-4, 23), (0, 1), (4, 23), (1, 23), (1, 23)],
        y: [(0, 1), (-20, 23), (164, 23), (0, 1), (-440, 23), (976, 23), (328, 23), (320, 23)],
    },
    GoldenRow {
        number: 4,
        form: [0, 3, 2, 3],
        x: [(0, 1), (1, 23), (0, 1), (3, 23), (1, 23), (-3, 23)],
        y: [(-4, 23), (124, 23), (12, 23), (0, 1), (304, 23), (-152, 23), (-240, 23), (-248, 23)],
    },
    GoldenRow {
        number: 5,
        form: [0, 3, 4, 1],
        x: [(0, 1), (2, 23), (0, 1), (6, 23), (1, 23), (-3, 23)],
        y: [(-8, 23), (108, 23), (24, 23), (-272, 23), (608, 23), (-96, 23), (-480, 23), (-528, 23)],
    },
    GoldenRow {
        number: 6,
        form: [0, 5, 2, 1],
        x: [(0, 1), (-1, 23), (0, 1), (9, 23), (1, 23), (9, 23)],
        y: [(-8, 23), (140, 23), (-152, 23), (384, 23), (-320, 23), (-744, 23), (640, 23), (280, 23)],
    },
    GoldenRow {
        number: 7,
        form: [1, 0, 1, 6],
        x: [(0, 1), (1, 23), (0, 1), (1, 23), (1, 23), (-1, 23)],
        y: [(44, 23), (0, 1), (20, 23), (8, 1), (0, 1), (104, 23), (0, 1), (0, 1)],
    },
    GoldenRow {
        number: 8,
        form: [1, 0, 3, 4],
        x: [(0, 1), (2, 23), (0, 1), (2, 23), (1, 23), (-1, 23)],
        y: [(42, 23), (0, 1), (86, 23), (232, 23), (0, 1), (328, 23), (0, 1), (0, 1)],
    },
    GoldenRow {
        number: 9,
        form: [1, 0, 5, 2],
        x: [(0, 1), (4, 23), (0, 1), (4, 23), (1, 23), (-1, 23)],
        y: [(38, 23), (0, 1), (126, 23), (144, 23), (0, 1), (592, 23), (0, 1), (0, 1)],
    },
    GoldenRow {
        number: 10,
        form: [1, 0, 7, 0],
        x: [(1, 23), (8, 23), (1, 23), (8, 23), (0, 1), (0, 1)],
        y: [(28, 23), (0, 1), (140, 23), (-224, 23), (0, 1), (672, 23), (0, 1), (0, 1)],
    },
    GoldenRow {
        number: 11,
        form: [1, 2, 1, 4],
        x: [(0, 1), (-1, 23), (0, 1), (3, 23), (1, 23), (3, 23)],
        y: [(44, 23), (56, 23), (148, 23), (280, 23), (-128, 23), (600, 23), (256, 23), (112, 23)],
    },
    GoldenRow {
        number: 12,
        form: [1, 2, 3, 2],
        x: [(0, 1), (-2, 23), (0, 1), (6, 23), (1, 23), (3, 23)],
        y: [(42, 23), (24, 23), (158, 23), (328, 23), (-256, 23), (776, 23), (512, 23), (288, 23)],
    },
    GoldenRow {
        number: 13,
        form: [1, 2, 5, 0],
        x: [(0, 1), (-4, 23), (0, 1), (12, 23), (1, 23), (3, 23)],
        y: [(38, 23), (-40, 23), (86, 23), (240, 23), (-880, 23), (208, 23), (656, 23), (640, 23)],
    },
    GoldenRow {
        number: 14,
        form: [1, 4, 1, 2],
        x: [(0, 1), (1, 23), (0, 1), (9, 23), (1, 23), (-9, 23)],
        y: [(36, 23), (128, 23), (172, 23), (8, 1), (480, 23), (24, 1), (-224, 23), (-256, 23)],
    },
    GoldenRow {
        number: 15,
        form: [1, 4, 3, 0],
        x: [(0, 1), (2, 23), (0, 1), (18, 23), (1, 23), (-9, 23)],
        y: [(26, 23), (64, 23), (22, 23), (-312, 23), (224, 23), (104, 23), (-1184, 23), (-640, 23)],
    },
    GoldenRow {
        number: 16,
        form: [1, 6, 1, 0],
        x: [(0, 1), (-1, 23), (0, 1), (27, 23), (1, 23), (27, 23)],
        y: [(20, 23), (24, 23), (-132, 23), (-40, 23), (-160, 23), (-360, 23), (1056, 23), (48, 23)],
    },
    GoldenRow {
        number: 17,
        form: [2, 1, 0, 5],
        x: [(0, 1), (1, 23), (0, 1), (3, 23), (1, 23), (-3, 23)],
        y: [(88, 23), (124, 23), (104, 23), (16, 1), (-64, 23), (216, 23), (128, 23), (-248, 23)],
    },
    GoldenRow {
        number: 18,
        form: [2, 1, 2, 3],
        x: [(0, 1), (2, 23), (0, 1), (6, 23), (1, 23), (-3, 23)],
        y: [(84, 23), (108, 23), (116, 23), (464, 23), (240, 23), (272, 23), (-112, 23), (-160, 23)],
    },
    GoldenRow {
        number: 19,
        form: [2, 1, 4, 1],
        x: [(0, 1), (4, 23), (0, 1), (12, 23), (1, 23), (-3, 23)],
        y: [(76, 23), (76, 23), (48, 23), (288, 23), (296, 23), (16, 23), (-408, 23), (-352, 23)],
    },
    GoldenRow {
        number: 20,
        form: [2, 3, 0, 3],
        x: [(0, 1), (-1, 23), (0, 1), (9, 23), (1, 23), (9, 23)],
        y: [(84, 23), (140, 23), (308, 23), (752, 23), (48, 23), (1096, 23), (272, 23), (280, 23)],
    },
    GoldenRow {
        number: 21,
        form: [2, 3, 2, 1],
        x: [(0, 1), (-2, 23), (0, 1), (18, 23), (1, 23), (9, 23)],
        y: [(76, 23), (60, 23), (156, 23), (576, 23), (-272, 23), (768, 23), (912, 23), (352, 23)],
    },
    GoldenRow {
        number: 22,
        form: [2, 5, 0, 1],
        x: [(0, 1), (1, 23), (0, 1), (27, 23), (1, 23), (-27, 23)],
        y: [(64, 23), (140, 23), (192, 23), (16, 1), (640, 23), (824, 23), (192, 23), (-280, 23)],
    },
    GoldenRow {
        number: 23,
        form: [3, 0, 1, 4],
        x: [(0, 1), (-2, 23), (0, 1), (6, 23), (1, 23), (3, 23)],
        y: [(134, 23), (208, 23), (66, 23), (696, 23), (112, 23), (40, 23), (144, 23), (-80, 23)],
    },
    GoldenRow {
        number: 24,
        form: [3, 0, 3, 2],
        x: [(0, 1), (-4, 23), (0, 1), (12, 23), (1, 23), (3, 23)],
        y: [(130, 23), (144, 23), (-6, 23), (976, 23), (224, 23), (-528, 23), (288, 23), (-96, 23)],
    },
    GoldenRow {
        number: 25,
        form: [3, 0, 5, 0],
        x: [(1, 23), (-8, 23), (-3, 23), (24, 23), (0, 1), (0, 1)],
        y: [(124, 23), (16, 23), (-324, 23), (992, 23), (-160, 23), (-2912, 23), (96, 23), (-128, 23)],
    },
    GoldenRow {
        number: 26,
        form: [3, 2, 1, 2],
        x: [(0, 1), (2, 23), (0, 1), (18, 23), (1, 23), (-9, 23)],
        y: [(118, 23), (248, 23), (298, 23), (792, 23), (592, 23), (840, 23), (-80, 23), (-272, 23)],
    },
    GoldenRow {
        number: 27,
        form: [3, 2, 3, 0],
        x: [(0, 1), (4, 23), (0, 1), (36, 23), (1, 23), (-9, 23)],
        y: [(98, 23), (120, 23), (-94, 23), (-16, 23), (80, 23), (-976, 23), (-1264, 23), (-672, 23)],
    },
    GoldenRow {
        number: 28,
        form: [3, 4, 1, 0],
        x: [(0, 1), (-2, 23), (0, 1), (54, 23), (1, 23), (27, 23)],
        y: [(86, 23), (-16, 23), (-126, 23), (216, 23), (-688, 23), (8, 23), (1008, 23), (176, 23)],
    },
    GoldenRow {
        number: 29,
        form: [4, 1, 0, 3],
        x: [(0, 1), (-2, 23), (0, 1), (18, 23), (1, 23), (9, 23)],
        y: [(168, 23), (428, 23), (616, 23), (1312, 23), (96, 23), (1872, 23), (544, 23), (-16, 23)],
    },
    GoldenRow {
        number: 30,
        form: [4, 1, 2, 1],
        x: [(0, 1), (-4, 23), (0, 1), (36, 23), (1, 23), (9, 23)],
        y: [(152, 23), (268, 23), (220, 23), (960, 23), (8, 23), (848, 23), (904, 23), (128, 23)],
    },
    GoldenRow {
        number: 31,
        form: [4, 3, 0, 1],
        x: [(0, 1), (2, 23), (0, 1), (54, 23), (1, 23), (-27, 23)],
        y: [(128, 23), (300, 23), (384, 23), (1040, 23), (1280, 23), (1440, 23), (384, 23), (-240, 23)],
    },
    GoldenRow {
        number: 32,
        form: [5, 0, 1, 2],
        x: [(0, 1), (4, 23), (0, 1), (36, 23), (1, 23), (-9, 23)],
        y: [(190, 23), (672, 23), (918, 23), (720, 23), (448, 23), (4176, 23), (576, 23), (64, 23)],
    },
    GoldenRow {
        number: 33,
        form: [5, 0, 3, 0],
        x: [(1, 23), (8, 23), (9, 23), (72, 23), (0, 1), (0, 1)],
        y: [(140, 23), (416, 23), (284, 23), (-1120, 23), (-832, 23), (1696, 23), (-832, 23), (0, 1)],
    },
    GoldenRow {
        number: 34,
        form: [5, 2, 1, 0],
        x: [(0, 1), (-4, 23), (0, 1), (108, 23), (1, 23), (27, 23)],
        y: [(126, 23), (88, 23), (-114, 23), (176, 23), (-1008, 23), (-176, 23), (912, 23), (64, 23)],
    },
    GoldenRow {
        number: 35,
        form: [6, 1, 0, 1],
        x: [(0, 1), (4, 23), (0, 1), (108, 23), (1, 23), (-27, 23)],
        y: [(164, 23), (620, 23), (1320, 23), (2016, 23), (1640, 23), (4880, 23), (1320, 23), (-160, 23)],
    },
    GoldenRow {
        number: 36,
        form: [7, 0, 1, 0],
        x: [(1, 23), (-8, 23), (-27, 23), (216, 23), (0, 1), (0, 1)],
        y: [(140, 23), (112, 23), (-84, 23), (1120, 23), (-1120, 23), (-2912, 23), (672, 23), (-896, 23)],
    },
];
