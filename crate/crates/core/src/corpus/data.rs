// Bit strings of the published covering sequences, codes and arrays.
// Generated once from the typeset tables; the verification suite checks every entry.

/// `(n, R, sequence)` for the very small sequences.
pub const SMALL_SEQUENCES: &[(usize, usize, &str)] = &[
    (8, 1, "00011011111001000001101011100101"),
    (8, 1, "00010110110111000010001111011101001"),
    (8, 1, "0001101111100100000110101110011100101"),
    (8, 1, "0001101111100100000001000001101011100101"),
    (8, 2, "00111011010010"),
    (9, 2, "00010010001110110111"),
];

pub const NINE_ONE_CODEWORDS: &[&str] = &["1000010000", "0001001101", "1001111001", "1111010111", "1010101010", "0101011000", "0110111001", "0111010000"];

pub const NINE_ONE_CHAIN: &[(&str, usize)] = &[
    ("100001000010000100", 6),
    ("000100110100010011", 5),
    ("100111100110011110", 5),
    ("111101011111110101", 5),
    ("101010101010101010", 5),
    ("010101100001010110", 4),
    ("011011100101101110", 5),
    ("011101000001110100", 3),
];

pub const NINE_ONE_106: &str = "10000100001000010011010001001111001100111101011111110101010101010101011000010101\
    10111001011011101000001110";

pub const NINE_ONE_93: &str = "10000100001001101000100111100110011110101111111010101010110000101011011100101101\
    1101000001110";

pub const NINE_ONE_102: &str = "10000100001001101000100111100110011110101111111101111111010101010110000101011011\
    1001011011101000001110";

pub struct ChainBlock {
    pub n: usize,
    pub radius: usize,
    /// Length of each codeword when a codeword list is printed.
    pub codeword_length: usize,
    pub codewords: &'static [&'static str],
    pub chain: &'static [(&'static str, usize)],
    pub sequence: &'static str,
    /// Printed `(total bits, total overlap)`, when given.
    pub totals: Option<(usize, usize)>,
}

pub const CHAIN_BLOCKS: &[ChainBlock] = &[
    ChainBlock {
        n: 10,
        radius: 1,
        codeword_length: 11,
        codewords: &[
            "00001010000", "00101001011", "10100101111", "10110111001",
            "11011101111", "01110111100", "11110010011", "11110010000",
            "11001000101", "00100011000", "01000110101", "10001101001",
            "00011010000",
        ],
        chain: &[
            ("00001010000000010100", 7),
            ("00101001011001010010", 7),
            ("10100101111101001011", 4),
            ("10110111001101101110", 7),
            ("11011101111110111011", 7),
            ("01110111100011101111", 4),
            ("11110010011111100100", 9),
            ("11110010000111100100", 7),
            ("11001000101110010001", 7),
            ("00100011000001000110", 8),
            ("01000110101010001101", 8),
            ("10001101001100011010", 8),
            ("00011010000000110100", 2),
        ],
        sequence: "00001010000000010100101100101001011111010010110111001101101110111111011101111000\
            11101111001001111110010000111100100010111001000110000010001101010100011010011000\
            110100000001101",
        totals: Some((260, 85)),
    },
    ChainBlock {
        n: 10,
        radius: 1,
        codeword_length: 11,
        codewords: &[
            "11010111111", "01011110000", "10111100101", "11100110011",
            "11001100001", "00110001101", "10001101100", "11011010101",
            "01101010010", "10101000011", "10000010010", "00000100000",
            "00001000101",
        ],
        chain: &[
            ("11010111111110101111", 7),
            ("01011110000010111100", 8),
            ("10111100101101111001", 6),
            ("11100110011111001100", 8),
            ("11001100001110011000", 7),
            ("00110001101001100011", 6),
            ("10001101100100011011", 5),
            ("11011010101110110101", 7),
            ("01101010010011010100", 7),
            ("10101000011101010000", 5),
            ("10000010010100000100", 8),
            ("00000100000000001000", 8),
            ("00001000101000010001", 1),
        ],
        sequence: "11010111111110101111000001011110010110111100110011111001100001110011000110100110\
            00110110010001101101010111011010100100110101000011101010000010010100000100000000\
            00100010100001000",
        totals: Some((260, 83)),
    },
    ChainBlock {
        n: 11,
        radius: 1,
        codeword_length: 11,
        codewords: &[
            "00111011011", "01110110100", "10110101100", "10101100010",
            "10001001011", "10001001010", "01010100111", "01010011010",
            "01001101110", "10111111110", "10111111111", "11111111001",
            "11111000010", "11100001100", "00011011001", "01100000000",
            "00000010000", "00001000001", "00000111101", "00011110011",
        ],
        chain: &[
            ("001110110110011101101", 9),
            ("011101101000111011010", 7),
            ("101101011001011010110", 7),
            ("101011000101010110001", 5),
            ("100010010111000100101", 10),
            ("100010010101000100101", 4),
            ("010101001110101010011", 8),
            ("010100110100101001101", 8),
            ("010011011100100110111", 5),
            ("101111111101011111111", 10),
            ("101111111111011111111", 8),
            ("111111110011111111100", 7),
            ("111110000101111100001", 8),
            ("111000011001110000110", 6),
            ("000110110010001101100", 5),
            ("011000000000110000000", 6),
            ("000000100000000001000", 8),
            ("000010000010000100000", 5),
            ("000001111010000011110", 8),
            ("000111100110001111001", 3),
        ],
        sequence: "00111011011001110110100011101101011001011010110001010101100010010111000100101010\
            00100101010011101010100110100101001101110010011011111111010111111111101111111100\
            11111111100001011111000011001110000110110010001101100000000011000000010000000000\
            1000001000010000011110100000111100110001111",
        totals: Some((420, 137)),
    },
    ChainBlock {
        n: 12,
        radius: 1,
        codeword_length: 0,
        codewords: &[],
        chain: &[],
        sequence: "10101100111011010110011111001011001111111101100111111111011011111111100001101111\
            11000010100001100001010011110000101001000010010100100011110010010001110100011000\
            11101001101101110100110110000110011011000100101101100010001100110001000100110000\
            10001001000101000100100101010110010010101000001001010100010101011010001010111001\
            00010101101010001010111111000101011111011110101111101000110111110100101111011010\
            01011100011110101110001101101111000110111001110011011100101001001110010100000110\
            01001000001100000000000110000011110011000001111000000110111100000001111110000000\
            1011101010000101110101001110111010100",
        totals: None,
    },
    ChainBlock {
        n: 13,
        radius: 1,
        codeword_length: 0,
        codewords: &[],
        chain: &[],
        sequence: "10111001111101101110011111110011100111111001111001111110011010010111100110100011\
            10000110100011101011000000111010110100101110101101010100001011010101011100110101\
            01011111000000010111110000100001111100001000100101000010001000100100100010001010\
            10000010001010100101100010101001010001101010010100000111100101000001000110100000\
            01000110011100010001100101001100011001010110110110010101100111010101011001110110\
            10011001110110010000011101100100111101011001001111100110010011110111110100111101\
            11111100011101111111010011011111110111110111111101101010111111011010111101110110\
            10111000000110101110001011101011100010000110111000100000001110001000000000011000\
            00000000011111101010000111111010010001111110100011111111101000101011111010001010\
            11101010001010111101100001101111011000110011110110001001011001100010010100100000\
            10010100110100100101001110111100010011101111000010111011110001101010111100011011\
            00010100011011000011100010110000111001001100001110011111000011100100000000111001\
            00011000111001000010101110010000100110110100001001101110000010011011101100100110\
            11101000110110111010001011000110100010110010110000101100101101111111001011011110\
            1000101101111010011001011110100111000010101001110000",
        totals: None,
    },
    ChainBlock {
        n: 14,
        radius: 1,
        codeword_length: 0,
        codewords: &[],
        chain: &[],
        sequence: "11110111101011011110111101010111110111101010010110111101010010000111101010010001\
            10001111001000110001010111000110001010010000110001010011100100010110011100100010\
            10101110010001010110110010001010100001010001010100001111001010100001101000100010\
            00110100010000011010100010000010000000010000010001000010000010001111110000010001\
            11011100001000111010110001000111010111001000111010101001000111010000100110111010\
            00010000000101000010000011111110110000011111110010101111111110010100000111110010\
            10001100111001010001100100010010001100100000000001100100000010101100100000010011\
            10010000001000011000000001000011011000001000011011101111000011011101010101011011\
            10101010010111110101010010100110101010010100110010110010100110011110000100110011\
            11001001001001111001001111100111001001111111101011001111111101110001111111101111\
            11011111110111111100010010111111100011010011111100011010010110100011010010101111\
            01101001010111100010001010111100010111010111100010110101111100010110101100001010\
            11010110001100011010110001100100101110001100100100100001100100100110000010100100\
            11000010000110011000010001111011000010001101111110010001101111101001010101111101\
            00100001011110100100001001001100100001001010010100001001010101000001001010100111\
            01101101010011101110011010011101110100000011101110100011110101110100011100001110\
            10001110011101000001110011101011100110011101011111000011101011111001111101011111\
            00110101001111100110101110100000110101110100110000101110100110101101110100110111\
            11111010011011100111010011011100101110011011100101111010011100101111001111000101\
            11100111101100011100111101101100100111101101100101110110101100101110110001000101\
            11011000010110011011000010110110001010010110110001100010110110001111100110110001\
            11110110011110111110110011101100110110011101101010110011101100101101011101100101\
            10110110110010110100100110010110100010011010110100010011101010100010011100011100\
            01001110000001001001110000001010100110000001010110101001001010110101000101100000\
            10100010110000000101010110000000101110001000000101110011000111011110011000111110\
            11001100011110000101100011110000000010011110000000111101110000000111001101010000\
            11100110110100111100110110100010100110110100000000110110100001101111110100001101\
            10111110000110110111000000110110111000011110110111000011000000111000011000001100\
            0100110000011000010110000011000",
        totals: None,
    },
    ChainBlock {
        n: 11,
        radius: 2,
        codeword_length: 15,
        codewords: &[
            "110011101001001", "111010111001011", "110101110000000", "010111001000000",
            "100101000111101", "001010001101100",
        ],
        chain: &[
            ("1100111010010011100111010", 6),
            ("1110101110010111110101110", 9),
            ("1101011100000001101011100", 8),
            ("0101110010000000101110010", 5),
            ("1001010001111011001010001", 9),
            ("0010100011011000010100011", 2),
        ],
        sequence: "11001110100100111001110101110010111110101110000000110101110010000000101110010100\
            0111101100101000110110000101000",
        totals: Some((150, 39)),
    },
    ChainBlock {
        n: 12,
        radius: 2,
        codeword_length: 13,
        codewords: &[
            "1000101000010", "0100000000100", "1000000001101", "0000110101101",
            "1010110011110", "1001110110000", "1000111001001", "1100101111100",
            "1100101111111",
        ],
        chain: &[
            ("100010100001010001010000", 6),
            ("010000000010001000000001", 10),
            ("100000000110110000000011", 6),
            ("000011010110100001101011", 6),
            ("101011001111010101100111", 6),
            ("100111011000010011101100", 3),
            ("100011100100110001110010", 6),
            ("110010111110011001011111", 11),
            ("110010111111111001011111", 1),
        ],
        sequence: "10001010000101000101000000001000100000000110110000000011010110100001101011001111\
            01010110011101100001001110110001110010011000111001011111001100101111111110010111\
            1",
        totals: Some((216, 55)),
    },
    ChainBlock {
        n: 13,
        radius: 2,
        codeword_length: 13,
        codewords: &[
            "1111111001011", "1001010011010", "0101001101101", "0011011000110",
            "0110001100101", "0011001011011", "0101101000001", "1011010000011",
            "0001001001111", "0100111010111", "1011111110111", "1111011100000",
            "1110000010001", "1000001000000", "0000000111001", "0111000100001",
        ],
        chain: &[
            ("1111111001011111111100101", 6),
            ("1001010011010100101001101", 10),
            ("0101001101101010100110110", 8),
            ("0011011000110001101100011", 8),
            ("0110001100101011000110010", 8),
            ("0011001011011001100101101", 7),
            ("0101101000001010110100000", 11),
            ("1011010000011101101000001", 4),
            ("0001001001111000100100111", 7),
            ("0100111010111010011101011", 4),
            ("1011111110111101111111011", 7),
            ("1111011100000111101110000", 7),
            ("1110000010001111000001000", 10),
            ("1000001000000100000100000", 5),
            ("0000000111001000000011100", 6),
            ("0111000100001011100010000", 0),
        ],
        sequence: "11111110010111111111001010011010100101001101101010100110110001100011011000110010\
            10110001100101101100110010110100000101011010000011101101000001001001111000100100\
            11101011101001110101111111011110111111101110000011110111000001000111100000100000\
            0100000100000001110010000000111000100001011100010000",
        totals: Some((400, 108)),
    },
    ChainBlock {
        n: 14,
        radius: 2,
        codeword_length: 0,
        codewords: &[],
        chain: &[],
        sequence: "00101111010010000101111010011111110111010011111110111110011111110110001100111110\
            11000110110110001000110110110000111110110110000111000110110000111001001101000111\
            00100111001100010100111001100101011001001100101011101111110101011101111000000101\
            10111100000001000111100000001100110100100001100110101001001100110101001001011010\
            10100100101101010111100101101010110011010111010110011010111101111011010111101110\
            10010111100111010010111011100000010111011100101000101011100101000100000011101000\
            100000000110000100000000110010001010000110010",
        totals: None,
    },
    ChainBlock {
        n: 15,
        radius: 2,
        codeword_length: 0,
        codewords: &[],
        chain: &[],
        sequence: "00001011110011000000101111001100100001011100110010000010111011001000001010011000\
            10000010100100000000001010010000111010000001000011101001010010001110100101001110\
            11101111010011101110111010011110111011101001000001110110100100000110010001010000\
            01100100101000000110010010101011001111001010101100101111011110110010111101011000\
            11111111010110001101000101011000110100111001011011010011100100111100011110010011\
            11000010010100111100001001101111110000100110111110100011111011111010001011011101\
            10100010110111001111001100011100111100110111001111110011011100010001001101110001\
            01001011010100010100101100110100010010110011011010011011001101101000011000110110\
            10000110111001011100011011100101100000011110010110000011100001111000001110000011\
            00111111100000110011000010000011001100010110001100110001010111110011000101010011\
            10100001010100111010111001010011101011111110111110101111111011010111010101001101\
            011101010110000001110101011",
        totals: None,
    },
    ChainBlock {
        n: 13,
        radius: 3,
        codeword_length: 13,
        codewords: &[
            "0110111110111", "1111101100010", "0110001101000", "1101000001001",
            "0100000100000",
        ],
        chain: &[
            ("0110111110111011011111011", 8),
            ("1111101100010111110110001", 7),
            ("0110001101000011000110100", 6),
            ("1101000001001110100000100", 10),
            ("0100000100000010000010000", 1),
        ],
        sequence: "01101111101110110111110110001011111011000110100001100011010000010011101000001000\
            0001000001000",
        totals: Some((125, 32)),
    },
    ChainBlock {
        n: 14,
        radius: 3,
        codeword_length: 15,
        codewords: &[
            "110011000000010", "011010101001111", "010011101011110", "110101111000100",
            "000101100001001", "101101011111101", "111111110001101", "000111011001010",
            "001001000101000", "010100001100010",
        ],
        chain: &[
            ("1100110000000101100110000000", 1),
            ("0110101010011110110101010011", 6),
            ("0100111010111100100111010111", 8),
            ("1101011110001001101011110001", 4),
            ("0001011000010010001011000010", 2),
            ("1011010111111011011010111111", 6),
            ("1111111100011011111111100011", 5),
            ("0001110110010100001110110010", 4),
            ("0010010001010000010010001010", 5),
            ("0101000011000100101000011000", 0),
        ],
        sequence: "11001100000001011001100000001101010100111101101010100111010111100100111010111100\
            01001101011110001011000010010001011000010110101111110110110101111111100011011111\
            1111000111011001010000111011001001000101000001001000101000011000100101000011000",
        totals: Some((280, 41)),
    },
    ChainBlock {
        n: 15,
        radius: 3,
        codeword_length: 0,
        codewords: &[],
        chain: &[],
        sequence: "10000001010010110000001010010000010001010010000010000001011001010000001011001000\
            11110101100100011111100011101011111100011101111101011111101111101011111000110011\
            01111100011000110111100011000110110001011101110110001011101101111001111101101111\
            00110101000001100110101000001110011001000001110011011100001010011011100001010000\
            00000000101000000011101001000000011101011010011111101011010011111001100101011111\
            001100",
        totals: None,
    },
];

/// (15,1) chain of 29-bit strings from the Hamming-derived code.
pub const HAMMING_CHAIN: &[(&str, usize)] = &[
    ("00001011101010100001011101010", 1),
    ("00010011001110100010011001110", 1),
    ("00001010001110100001010001110", 7),
    ("00011100111111100011100111111", 8),
    ("00111111111010100111111111010", 1),
    ("00010011100101100010011100101", 5),
    ("00101101101110100101101101110", 1),
    ("00000111100001100000111100001", 6),
    ("1000010000100001000", 8),
    ("00001000100010100001000100010", 9),
    ("00010001001001100010001001001", 9),
    ("00100100111101100100100111101", 8),
    ("00111101010110100111101010110", 1),
    ("00011001111110100011001111110", 1),
    ("00011011010010100011011010010", 4),
    ("00101011111110100101011111110", 1),
    ("00001101111010100001101111010", 1),
    ("00001110011001100001110011001", 7),
    ("00110011011010100110011011010", 1),
    ("00000110101110100000110101110", 1),
    ("00001110110010100001110110010", 4),
    ("00101110100110100101110100110", 1),
    ("00000101100110100000101100110", 1),
    ("00000011110110100000011110110", 1),
    ("00000010010010100000010010010", 8),
    ("10010010010010010", 7),
    ("00100101011001100100101011001", 3),
    ("00100101110010100100101110010", 1),
    ("00000001011010100000001011010", 10),
    ("00010110100100100010110100100", 5),
    ("00100111011110100100111011110", 1),
    ("00011100100110100011100100110", 8),
    ("00100110111010100100110111010", 1),
    ("00011010110110100011010110110", 1),
    ("00001100101100100001100101100", 2),
    ("00010101101100100010101101100", 2),
    ("00001010111100100001010111100", 2),
    ("00011111011100100011111011100", 2),
    ("00011001001100100011001001100", 2),
    ("00010011111100100010011111100", 2),
    ("00000110011100100000110011100", 2),
    ("00000000100111100000000100111", 10),
    ("00001001110100100001001110100", 2),
    ("00000000010101100000000010101", 10),
    ("00000101010100100000101010100", 2),
    ("00001101001000100001101001000", 3),
    ("00001011011000100001011011000", 3),
    ("00000111111000100000111111000", 3),
    ("00000001101000100000001101000", 3),
    ("00000100110000100000100110000", 4),
    ("00000010100000100000010100000", 5),
    ("000000000000000", 10),
    ("00000000001100100000000001100", 10),
    ("00000011000100100000011000100", 6),
    ("00010001100010100010001100010", 5),
    ("00010101000111100010101000111", 6),
    ("00011111101110100011111101110", 1),
    ("00010100111010100010100111010", 8),
    ("00111010111011100111010111011", 0),
    ("00010010101010100010010101010", 9),
    ("01010101011101101010101011101", 0),
    ("00010010110011100010010110011", 0),
    ("00001111001111100001111001111", 6),
    ("00111101001111100111101001111", 6),
    ("00111110110101100111110110101", 0),
    ("00001011110011100001011110011", 0),
    ("00001100011110100001100011110", 8),
    ("00011110010011100011110010011", 7),
    ("00100111110101100100111110101", 0),
    ("00010110111101100010110111101", 0),
    ("00001001101101100001001101101", 0),
    ("00001001011111100001001011111", 9),
    ("00101111101001100101111101001", 0),
    ("00001001000110100001001000110", 6),
    ("00011010011101100011010011101", 7),
    ("00111011011111100111011011111", 0),
    ("00001000111011100001000111011", 9),
    ("00011101101001100011101101001", 0),
    ("00010001111011100010001111011", 9),
    ("00111101111101100111101111101", 0),
    ("00010101110101100010101110101", 0),
    ("00001100110101100001100110101", 8),
    ("00110101010011100110101010011", 0),
    ("00000111010011100000111010011", 0),
    ("00010101011110100010101011110", 8),
    ("01011110111011101011110111011", 0),
    ("00000110110111100000110110111", 0),
    ("00010111011001100010111011001", 0),
    ("00010011010111100010011010111", 6),
    ("01011111011111101011111011111", 0),
    ("00001010100101100001010100101", 8),
    ("1010010100101001010", 6),
    ("00101011010101100101011010101", 0),
    ("00000101111111100000101111111", 0),
    ("00001110101011100001110101011", 0),
    ("00000110000101100000110000101", 7),
    ("00001010010111100001010010111", 7),
    ("00101111011011100101111011011", 8),
    ("11011011011011011", 0),
    ("00000101001101100000101001101", 6),
    ("00110110011011100110110011011", 0),
    ("00010111110010100010111110010", 4),
    ("00101011100111100101011100111", 8),
    ("1110011100111001110", 6),
    ("00111011101101100111011101101", 0),
    ("00000100101001100000100101001", 8),
    ("00101001111001100101001111001", 0),
    ("00000100011011100000100011011", 8),
    ("00011011001011100011011001011", 6),
    ("00101110111111100101110111111", 0),
    ("00011001100111100011001100111", 0),
    ("00000011101111100000011101111", 0),
    ("00000011011101100000011011101", 0),
    ("00000111001010100000111001010", 6),
    ("00101010011010100101010011010", 7),
    ("00110100110111100110100110111", 8),
    ("00110111111111100110111111111", 9),
    ("111111111111111", 0),
    ("00000010111001100000010111001", 0),
    ("00001101010001100001101010001", 4),
    ("00010111101011100010111101011", 0),
    ("00011101011011100011101011011", 0),
    ("00000010001011100000010001011", 7),
    ("00010110001111100010110001111", 7),
    ("00011111110111100011111110111", 8),
    ("1111011110111101111", 0),
    ("00000001110001100000001110001", 4),
    ("00010100100011100010100100011", 5),
    ("00011010101111100011010101111", 7),
    ("01011111101101101011111101101", 0),
    ("00001111010110100001111010110", 8),
    ("1101011010110101101", 0),
    ("00010110010110100010110010110", 7),
    ("00101101110111100101101110111", 0),
    ("00000001000011100000001000011", 6),
    ("00001101100011100001101100011", 7),
    ("1100011000110001100", 7),
    ("00011001010101100011001010101", 8),
    ("01010101101111101010101101111", 0),
    ("00000000111110100000000111110", 10),
    ("00001111100100100001111100100", 5),
    ("00100101101011100100101101011", 0),
    ("00011011111001100011011111001", 0),
    ("00001111111101100001111111101", 0),
];

/// (16,1) chain of 79-bit strings from the self-dual code.
pub const SELF_DUAL_CHAIN: &[(&str, usize)] = &[
    ("1110010011010011000110110010110011100100110100010001101100101110111001001101001", 11),
    ("0100110100100010101100101101110101001101001001101011001011011001010011010010001", 11),
    ("1101001000110110001011001100100111010011001101100010110111001001110100100011011", 9),
    ("1000110110100101011100100101101010000101101001010111101001011010100011011010010", 9),
    ("0110100101000001100111101011111001100001010000011001011010111110011010010100000", 9),
    ("0101000000101100101011111111001101010000000011001010111111010011010100000010110", 8),
    ("0001011010000010111010010111110100010010100000101110110101111101000101101000001", 7),
    ("1000001111000101001111000011101011000011110001010111110000111010100000111100010", 5),
    ("0001011110000111111010000111100000010011100001111110110001111000000101111000011", 10),
    ("1111000011011000000001110010011111111000110110000000111100100111111100001101100", 8),
    ("0110110010001000100100110111011101101101100010001001001001110111011011001000100", 8),
    ("0100010000101111101110111101000001000100001010111011101111010100010001000010111", 12),
    ("0010000101110000110011101000111100110001011100001101111010001111001000010111000", 13),
    ("1000010111000100011010100011101110010101110001000111101000111011100001011100010", 12),
    ("0010111000101000110100011101011101101110001010001001000111010111001011100010100", 10),
    ("1100010100100001001110111101111011000100001000010011101011011110110001010010000", 8),
    ("1001000010001010011011110111010010010000100010110110111101110101100100001000101", 7),
    ("1000101110111100011101000100000110001011101111100111010001000011100010111011110", 8),
    ("1101111000100111001000011101100011011110011001110010000110011000110111100010011", 7),
    ("0010011001100000110110011001111101100110011000001001100110011111001001100110000", 10),
    ("1100110000110101001100111100101011001100011101010011001110001010110011000011010", 9),
    ("0000110101111111111100101000000000001101111111111111001000000000000011010111111", 10),
    ("1010111111000000010100000011101110101111110001000101000000111111101011111100000", 10),
    ("1111100000110000000001011100111111111010001100000000011111001111111110000011000", 10),
    ("0000011000110001111110011100111000000110001100111111100111001100000001100011000", 11),
    ("0110001100001000100111001111001101100011000011001001110011110111011000110000100", 9),
    ("1100001001101100001111011001001111000010011111000011110110000011110000100110110", 10),
    ("0100110110110100101100100100101101001101111101001011001000001011010011011011010", 9),
    ("0110110101001101100100101011001001100101010011011001101010110010011011010100110", 7),
    ("0100110000001101101100111111001001011100000011011010001111110010010011000000110", 12),
    ("0110000001100110100111111001100100100000011001101101111110011001011000000110011", 9),
    ("0001100110011010111001100110010100111001100110101100011001100101000110011001101", 6),
    ("0011010001110010110010111000110101110100011100101000101110001101001101000111001", 11),
    ("0100011100111011101110001100010001000111000110111011100011100100010001110011101", 10),
    ("1110011101011110000110001110000111100111000111100001100010100001111001110101111", 9),
    ("1101011110101011001010000111010011010111100010110010100001010100110101111010101", 7),
    ("1010101011111011010101010000010010111010111110110100010100000100101010101111101", 10),
    ("0101111101010010101000001010110111011111010100100010000010101101010111110101001", 8),
    ("1010100100111001010100101100011010101101001110010101011011000110101010010011100", 10),
    ("0010011100010010110110001110111100100111000100001101100011101101001001110001001", 11),
    ("0111000100100000100111101101111101100001001000001000111011011111011100010010000", 11),
    ("0001001000010100101011011110101101010010000101001110110111101011000100100001010", 9),
    ("1000010101100000011110111001111110000100011000000111101010011111100001010110000", 11),
    ("0101011000001010101010011101010101010110001010101010100111110101010101100000101", 10),
    ("1100000101000010000111101011110111100001010000100011111010111101110000010100001", 5),
    ("0000101001011011111101011010010000011010010110111110010110100100000010100101101", 13),
    ("0010100101101000110101101001011100111001011010001100011010010111001010010110100", 8),
    ("1011010000100100010011111101101110110000001001000100101111011011101101000010010", 13),
    ("1101000010010110011011110110100110010000100101100010111101101001110100001001011", 5),
    ("0101101111001111101001000011000001011111110011111010000000110000010110111100111", 10),
    ("0111100111101101100000100001001001111101111011011000011000010010011110011110110", 9),
    ("0111101100101010100001001101010101101011001010101001010011010101011110110010101", 13),
    ("1110110010101101000100110101001011111100101011010000001101010010111011001010110", 10),
    ("1001010110001111011010100111000110010101100011100110101001110000100101011000111", 7),
    ("1000111101111101011100001000001010001111111111010111000000000010100011110111110", 9),
    ("1101111100010111001000001110100011011101000101110010001011101000110111110001011", 12),
    ("1111100010111110000001110100000110111000101111100100011101000001111110001011111", 11),
    ("1000101111110111011101000000100010001011110101110111010000101000100010111111011", 8),
    ("1111101101101111000001001001000011111111011011110000000010010000111110110110111", 10),
    ("0110110111010011100100100011110001101101110000111001001000101100011011011101001", 9),
    ("0111010010101011100010110101110001110100101000111000101101010100011101001010101", 8),
    ("0101010110011111101010100110000001010111100111111010100001100000010101011001111", 12),
    ("1010110011110000010100110000111110101100110100000101001100101111101011001111000", 11),
    ("1100111100010000001100001110011111001111000110000011000011101111110011110001000", 0),
];

pub const SHIFT_ARRAY_13X12: &[&str] = &[
    "000100111011",
    "001001110110",
    "100111011000",
    "111011000100",
    "110001001110",
    "100111011000",
    "011000100111",
    "001110110001",
    "000100111011",
    "011000100111",
    "110110001001",
    "111011000100",
    "111011000100",
];
