//! Row-by-row backtracking over tables whose rows are drawn from fixed
//! candidate lists.
//!
//! Both skew trusses and weak trusses reduce to the same shape of
//! constraint: for every `a, b` there is a pivot `x` (the entry `a∗b`
//! itself, or `σ(a) + a∗b`) with `x∗c = a∗(b∗c)` for all `c`. A pair is
//! checked as soon as rows `a`, `b` and `x` are all placed, which is exactly
//! once, at row `max(a, b, x)`.

pub(crate) struct RowSearch<'a> {
    pub n: usize,
    /// `candidates[a]` lists the admissible rows for `a`.
    pub candidates: Vec<Vec<Vec<u8>>>,
    /// Added on the left of `a∗b` to get the pivot; `None` means the pivot
    /// is the entry itself.
    pub pivot_shift: Option<&'a [u8]>,
    pub add: &'a [u8],
}

pub(crate) struct SearchOutcome {
    pub tables: Vec<Vec<u8>>,
    pub candidates_examined: u64,
}

impl RowSearch<'_> {
    pub fn run(&self) -> SearchOutcome {
        let mut table = vec![0u8; self.n * self.n];
        let mut out = SearchOutcome {
            tables: Vec::new(),
            candidates_examined: 0,
        };
        self.place(0, &mut table, &mut out);
        out
    }

    fn pivot(&self, a: usize, entry: u8) -> usize {
        match self.pivot_shift {
            None => entry as usize,
            Some(shift) => self.add[shift[a] as usize * self.n + entry as usize] as usize,
        }
    }

    fn place(&self, k: usize, table: &mut [u8], out: &mut SearchOutcome) {
        let n = self.n;
        if k == n {
            out.tables.push(table.to_vec());
            return;
        }
        for row in &self.candidates[k] {
            out.candidates_examined += 1;
            table[k * n..(k + 1) * n].copy_from_slice(row);
            if self.consistent(k, table) {
                self.place(k + 1, table, out);
            }
        }
    }

    fn consistent(&self, k: usize, t: &[u8]) -> bool {
        let n = self.n;
        for a in 0..=k {
            for b in 0..=k {
                let x = self.pivot(a, t[a * n + b]);
                if x > k || a.max(b).max(x) != k {
                    continue;
                }
                for c in 0..n {
                    let bc = t[b * n + c] as usize;
                    if t[x * n + c] != t[a * n + bc] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
