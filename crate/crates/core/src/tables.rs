//! Subgroups and coset representatives of the published `(7, d)` and `(8, d)` coset
//! codes. Rows are stored as printed except where noted.

/// One row: subgroup generators, `|H|`, and the representatives `S_H` whose cosets
/// together with `H` form the code.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub n: usize,
    pub d: u32,
    /// Number of subgroups of `S_n` that are `(n, d)` codes.
    pub subgroup_count: u64,
    pub generators: &'static [&'static [u8]],
    pub order: usize,
    /// Number of left cosets of `H` that are `(n, d)` codes.
    pub lambda: usize,
    pub reps: &'static [&'static [u8]],
}

impl TableRow {
    pub fn code_size(&self) -> usize {
        (self.reps.len() + 1) * self.order
    }
}

pub static TABLE_N7: &[TableRow] = &[
    TableRow {
        n: 7,
        d: 4,
        subgroup_count: 5565,
        generators: &[&[4, 2, 1, 3, 7, 5, 6], &[3, 5, 2, 6, 7, 1, 4]],
        order: 21,
        lambda: 240,
        reps: &[
            &[1, 2, 3, 7, 4, 6, 5],
            &[1, 2, 3, 5, 7, 6, 4],
            &[1, 2, 6, 3, 4, 7, 5],
            &[1, 2, 4, 7, 3, 5, 6],
            &[1, 2, 5, 4, 3, 7, 6],
            &[1, 2, 5, 6, 3, 4, 7],
            &[1, 2, 4, 6, 5, 3, 7],
            &[1, 2, 6, 7, 5, 3, 4],
            &[1, 2, 7, 4, 6, 5, 3],
            &[1, 4, 2, 3, 6, 7, 5],
            &[1, 6, 2, 7, 4, 3, 5],
            &[1, 5, 2, 7, 6, 3, 4],
            &[1, 6, 4, 2, 3, 5, 7],
            &[1, 6, 5, 2, 3, 7, 4],
        ],
    },
    TableRow {
        n: 7,
        d: 5,
        subgroup_count: 3651,
        generators: &[&[3, 4, 1, 2, 6, 5, 7], &[5, 2, 1, 7, 3, 4, 6]],
        order: 42,
        lambda: 57,
        reps: &[&[1, 2, 5, 3, 7, 6, 4], &[1, 2, 7, 6, 4, 3, 5]],
    },
    TableRow {
        n: 7,
        d: 6,
        subgroup_count: 2811,
        generators: &[&[7, 2, 1, 5, 6, 4, 3], &[3, 4, 2, 5, 7, 1, 6]],
        order: 21,
        lambda: 166,
        reps: &[
            &[1, 2, 3, 7, 6, 5, 4],
            &[1, 2, 7, 4, 6, 5, 3],
            &[1, 6, 2, 5, 4, 7, 3],
        ],
    },
    TableRow {
        n: 7,
        d: 7,
        subgroup_count: 1684,
        generators: &[&[6, 2, 4, 3, 7, 1, 5], &[1, 3, 6, 5, 7, 2, 4]],
        order: 42,
        lambda: 3,
        reps: &[],
    },
    TableRow {
        n: 7,
        d: 8,
        subgroup_count: 1181,
        generators: &[&[2, 5, 7, 3, 4, 1, 6]],
        order: 7,
        lambda: 624,
        reps: &[
            &[1, 2, 7, 6, 3, 5, 4],
            &[1, 5, 7, 2, 4, 3, 6],
            &[1, 5, 6, 3, 2, 7, 4],
        ],
    },
    TableRow {
        n: 7,
        d: 9,
        subgroup_count: 686,
        generators: &[&[2, 5, 7, 4, 1, 3, 6]],
        order: 3,
        lambda: 1418,
        reps: &[
            &[1, 7, 2, 4, 6, 5, 3],
            &[1, 6, 3, 4, 7, 5, 2],
            &[4, 6, 2, 1, 7, 3, 5],
            &[3, 6, 5, 1, 2, 7, 4],
        ],
    },
    TableRow {
        n: 7,
        d: 10,
        subgroup_count: 475,
        generators: &[&[2, 4, 7, 5, 3, 6, 1]],
        order: 6,
        lambda: 92,
        reps: &[&[3, 6, 4, 2, 5, 1, 7]],
    },
    TableRow {
        n: 7,
        d: 11,
        subgroup_count: 219,
        generators: &[&[6, 5, 3, 7, 2, 1, 4]],
        order: 2,
        lambda: 1400,
        reps: &[
            &[1, 7, 3, 5, 6, 4, 2],
            &[5, 4, 3, 2, 1, 7, 6],
            &[7, 2, 1, 4, 6, 5, 3],
        ],
    },
    TableRow {
        n: 7,
        d: 12,
        subgroup_count: 163,
        generators: &[&[2, 4, 7, 6, 3, 5, 1]],
        order: 7,
        lambda: 40,
        reps: &[],
    },
    TableRow {
        n: 7,
        d: 13,
        subgroup_count: 83,
        generators: &[&[1, 7, 6, 4, 5, 3, 2]],
        order: 2,
        lambda: 198,
        reps: &[&[6, 2, 4, 5, 7, 3, 1]],
    },
    TableRow {
        n: 7,
        d: 14,
        subgroup_count: 66,
        generators: &[&[6, 5, 3, 4, 2, 1, 7]],
        order: 2,
        lambda: 266,
        reps: &[&[7, 5, 1, 4, 3, 6, 2]],
    },
];

pub static TABLE_N8: &[TableRow] = &[
    TableRow {
        n: 8,
        d: 3,
        subgroup_count: 105236,
        generators: &[&[4, 2, 5, 1, 3, 8, 7, 6], &[8, 6, 3, 4, 1, 7, 2, 5]],
        order: 336,
        lambda: 120,
        reps: &[
            &[1, 2, 3, 4, 5, 8, 7, 6],
            &[1, 2, 3, 4, 6, 8, 5, 7],
            &[1, 2, 3, 7, 4, 5, 6, 8],
            &[1, 2, 3, 8, 4, 7, 5, 6],
            &[1, 2, 3, 7, 4, 8, 6, 5],
            &[1, 2, 3, 6, 5, 4, 8, 7],
            &[1, 2, 3, 8, 5, 4, 6, 7],
            &[1, 2, 3, 8, 6, 4, 5, 7],
            &[1, 2, 3, 7, 5, 8, 4, 6],
            &[1, 2, 3, 7, 8, 6, 5, 4],
        ],
    },
    TableRow {
        n: 8,
        d: 4,
        subgroup_count: 89682,
        generators: &[&[7, 1, 8, 3, 4, 2, 6, 5], &[6, 5, 4, 2, 3, 8, 1, 7]],
        order: 168,
        lambda: 240,
        reps: &[
            &[1, 2, 3, 4, 8, 5, 7, 6],
            &[1, 2, 3, 4, 6, 8, 7, 5],
            &[1, 2, 3, 7, 4, 5, 8, 6],
            &[1, 2, 3, 5, 8, 4, 6, 7],
            &[1, 2, 3, 6, 5, 4, 8, 7],
            &[1, 2, 3, 6, 7, 4, 5, 8],
            &[1, 2, 3, 8, 7, 4, 6, 5],
            &[1, 2, 3, 5, 7, 6, 4, 8],
            &[1, 2, 3, 8, 5, 7, 6, 4],
            &[1, 2, 3, 6, 8, 7, 5, 4],
            &[1, 2, 5, 4, 3, 6, 8, 7],
            &[1, 2, 8, 5, 4, 3, 6, 7],
        ],
    },
    TableRow {
        n: 8,
        d: 5,
        subgroup_count: 66442,
        generators: &[&[7, 2, 8, 6, 5, 4, 1, 3], &[6, 4, 3, 5, 2, 8, 7, 1]],
        order: 336,
        lambda: 16,
        reps: &[&[1, 2, 3, 8, 4, 7, 5, 6]],
    },
    TableRow {
        n: 8,
        d: 6,
        subgroup_count: 54709,
        generators: &[&[8, 3, 4, 6, 5, 7, 1, 2], &[5, 2, 4, 8, 3, 1, 6, 7]],
        order: 56,
        lambda: 672,
        reps: &[
            &[1, 2, 3, 8, 4, 6, 7, 5],
            &[1, 2, 3, 7, 6, 4, 8, 5],
            &[1, 2, 3, 5, 8, 6, 7, 4],
            &[1, 2, 6, 5, 3, 4, 8, 7],
            &[1, 2, 7, 5, 3, 6, 8, 4],
            &[1, 2, 7, 8, 6, 3, 5, 4],
        ],
    },
    TableRow {
        n: 8,
        d: 7,
        subgroup_count: 37499,
        generators: &[&[8, 5, 4, 1, 6, 3, 7, 2], &[7, 2, 1, 3, 6, 8, 5, 4]],
        order: 56,
        lambda: 390,
        reps: &[
            // Printed with seven entries; the final 8 is the only completion that keeps distance 7.
            &[1, 2, 7, 6, 3, 4, 5, 8],
            &[1, 2, 4, 6, 7, 8, 5, 3],
        ],
    },
    TableRow {
        n: 8,
        d: 8,
        subgroup_count: 29249,
        generators: &[&[5, 3, 6, 1, 2, 8, 7, 4], &[7, 2, 6, 8, 4, 5, 3, 1]],
        order: 56,
        lambda: 390,
        reps: &[&[1, 2, 4, 8, 5, 7, 3, 6]],
    },
    TableRow {
        n: 8,
        d: 9,
        subgroup_count: 18352,
        generators: &[&[4, 1, 7, 6, 8, 3, 5, 2], &[5, 1, 7, 3, 2, 6, 4, 8]],
        order: 48,
        lambda: 12,
        reps: &[],
    },
    TableRow {
        n: 8,
        d: 10,
        subgroup_count: 13529,
        generators: &[&[6, 1, 3, 5, 7, 2, 4, 8], &[8, 7, 1, 6, 3, 2, 4, 5]],
        order: 24,
        lambda: 260,
        reps: &[&[1, 2, 7, 6, 5, 3, 8, 4]],
    },
    TableRow {
        n: 8,
        d: 11,
        subgroup_count: 8135,
        generators: &[&[5, 6, 8, 7, 1, 2, 4, 3], &[1, 3, 7, 8, 5, 2, 4, 6]],
        order: 12,
        lambda: 212,
        reps: &[&[2, 8, 3, 1, 6, 4, 7, 5]],
    },
    TableRow {
        n: 8,
        d: 12,
        subgroup_count: 6163,
        generators: &[&[7, 8, 5, 6, 3, 4, 1, 2], &[4, 8, 5, 2, 7, 3, 6, 1]],
        order: 24,
        lambda: 12,
        reps: &[],
    },
    TableRow {
        n: 8,
        d: 13,
        subgroup_count: 3169,
        generators: &[&[4, 6, 1, 5, 8, 3, 7, 2]],
        order: 7,
        lambda: 708,
        reps: &[&[3, 7, 4, 6, 2, 5, 1, 8]],
    },
    TableRow {
        n: 8,
        d: 14,
        subgroup_count: 2324,
        generators: &[&[4, 6, 1, 5, 8, 3, 7, 2]],
        order: 7,
        lambda: 708,
        reps: &[&[3, 7, 4, 6, 2, 5, 1, 8]],
    },
    TableRow {
        n: 8,
        d: 15,
        subgroup_count: 810,
        generators: &[&[4, 6, 7, 8, 1, 3, 5, 2]],
        order: 8,
        lambda: 168,
        reps: &[],
    },
    TableRow {
        n: 8,
        d: 16,
        subgroup_count: 607,
        generators: &[&[4, 7, 6, 8, 1, 2, 3, 5], &[7, 4, 5, 3, 2, 1, 8, 6]],
        order: 8,
        lambda: 96,
        reps: &[],
    },
    TableRow {
        n: 8,
        d: 17,
        subgroup_count: 252,
        generators: &[&[7, 3, 8, 2, 6, 1, 5, 4]],
        order: 4,
        lambda: 112,
        reps: &[],
    },
    TableRow {
        n: 8,
        d: 18,
        subgroup_count: 189,
        generators: &[&[7, 3, 8, 2, 6, 1, 5, 4]],
        order: 4,
        lambda: 112,
        reps: &[],
    },
];

/// Rows for `n = 7` or `n = 8`.
pub fn table_rows(n: usize) -> Option<&'static [TableRow]> {
    match n {
        7 => Some(TABLE_N7),
        8 => Some(TABLE_N8),
        _ => None,
    }
}
