//! Printed reference values mod 5⁵, each coefficient as [ω⁰, ω¹, ω²].
//!
//! The tables headed "z-coordinate" in print hold x(S + nQ0); the ones headed "1/x" are
//! the display chain Σ s_k·Z^k, with s the w/z series of the original model and Z the
//! neighbouring table.

pub type Table = [[u32; 3]; 6];

pub const Z_Q0: [u32; 3] = [1895, 2670, 1715];
pub const LOG_Q0: [u32; 3] = [2145, 2670, 90];
pub const Z_OF_NQ0: Table = [
    [0, 0, 0],
    [2145, 2670, 90],
    [0, 0, 0],
    [2250, 625, 2250],
    [0, 0, 0],
    [625, 2500, 2500],
];
/// 1/x(nQ0)
pub const INV_X_O: Table = [
    [0, 0, 0],
    [0, 0, 0],
    [2425, 1525, 1225],
    [0, 0, 0],
    [1875, 0, 0],
    [0, 0, 0],
];

pub struct CosetTables {
    pub name: &'static str,
    pub x: Table,
    pub chain: Table,
}

pub const COSETS: [CosetTables; 5] = [
    CosetTables {
        name: "P0",
        x: [
            [1, 0, 0],
            [2025, 1685, 1155],
            [2600, 750, 2900],
            [2750, 2625, 1750],
            [1875, 1875, 2500],
            [625, 2500, 625],
        ],
        chain: [
            [2358, 2028, 971],
            [985, 870, 1105],
            [625, 3100, 1775],
            [1000, 875, 1625],
            [2500, 625, 1250],
            [625, 0, 1875],
        ],
    },
    CosetTables {
        name: "10P0",
        x: [
            [1584, 1980, 2780],
            [2380, 785, 2730],
            [2500, 2200, 2800],
            [1000, 2125, 625],
            [0, 1250, 625],
            [2500, 1250, 2500],
        ],
        chain: [
            [2058, 573, 2971],
            [2515, 2445, 2755],
            [1800, 1875, 1050],
            [1875, 1875, 1625],
            [625, 625, 2500],
            [2500, 1875, 625],
        ],
    },
    CosetTables {
        name: "4P0+T",
        x: [
            [2769, 1325, 2740],
            [2495, 2790, 1945],
            [1000, 2450, 300],
            [2125, 375, 2500],
            [0, 1250, 625],
            [625, 1875, 625],
        ],
        chain: [
            [313, 2788, 2356],
            [3035, 680, 1295],
            [1175, 0, 2675],
            [0, 2500, 2750],
            [625, 625, 2500],
            [625, 1250, 2500],
        ],
    },
    CosetTables {
        name: "13P0+T",
        x: [
            [1951, 1595, 2585],
            [1950, 1940, 745],
            [975, 2750, 2775],
            [1625, 1125, 2625],
            [1875, 1875, 2500],
            [2500, 625, 2500],
        ],
        chain: [
            [803, 3118, 2456],
            [2015, 2980, 1795],
            [2250, 2100, 900],
            [2125, 1875, 1500],
            [2500, 625, 1250],
            [2500, 0, 1250],
        ],
    },
    CosetTables {
        name: "T",
        x: [
            [0, 0, 0],
            [0, 0, 0],
            [2275, 150, 2425],
            [0, 0, 0],
            [1875, 0, 1875],
            [0, 0, 0],
        ],
        chain: [[0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0], [1250, 625, 2500], [0, 0, 0]],
    },
];
