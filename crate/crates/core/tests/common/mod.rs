//! Direct, loop-over-everything checks on raw tables. Shared by the
//! integration tests as an oracle independent of the library's law module.

#![allow(dead_code)]

use std::io::Write;

use trusslab::group::FiniteGroup;

pub type Table = Vec<Vec<usize>>;

pub struct Raw {
    pub n: usize,
    pub add: Table,
    pub neg: Vec<usize>,
}

impl Raw {
    pub fn of(g: &FiniteGroup) -> Self {
        let add = g.rows();
        let n = add.len();
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a][b] == 0).unwrap()).collect();
        Raw { n, add, neg }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n * n * n).map(move |i| (i / (n * n), (i / n) % n, i % n))
    }

    pub fn associative(&self, t: &Table) -> bool {
        self.triples().all(|(a, b, c)| t[t[a][b]][c] == t[a][t[b][c]])
    }

    pub fn left_distributive(&self, t: &Table) -> bool {
        self.triples().all(|(a, b, c)| t[a][self.add(b, c)] == self.add(t[a][b], t[a][c]))
    }

    /// `a∘(b+c) = a∘b − σ(a) + a∘c`.
    pub fn left_skew(&self, t: &Table, s: &[usize]) -> bool {
        self.triples()
            .all(|(a, b, c)| t[a][self.add(b, c)] == self.add(self.add(t[a][b], self.neg[s[a]]), t[a][c]))
    }

    /// `(a+b)∘c = a∘c − τ(c) + b∘c`.
    pub fn right_skew(&self, t: &Table, s: &[usize]) -> bool {
        self.triples()
            .all(|(a, b, c)| t[self.add(a, b)][c] == self.add(self.add(t[a][c], self.neg[s[c]]), t[b][c]))
    }

    pub fn skew_truss(&self, t: &Table, s: &[usize]) -> bool {
        self.associative(t) && self.left_skew(t, s)
    }

    /// `(σ(a) + a·b)·c = a·(b·c)` with `·` left distributive.
    pub fn weak_truss(&self, d: &Table, s: &[usize]) -> bool {
        self.left_distributive(d) && self.triples().all(|(a, b, c)| d[self.add(s[a], d[a][b])][c] == d[a][d[b][c]])
    }

    pub fn interchange(&self, t: &Table) -> bool {
        let n = self.n;
        (0..n.pow(4)).all(|i| {
            let (w, x, y, z) = (i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n);
            t[self.add(w, x)][self.add(y, z)] == self.add(t[w][y], t[x][z])
        })
    }

    pub fn endomorphism(&self, m: &[usize]) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| m[self.add(a, b)] == self.add(m[a], m[b])))
    }

    pub fn idempotent(m: &[usize]) -> bool {
        m.iter().all(|&y| m[y] == y)
    }

    /// `−σ(a) + a∘b`.
    pub fn lambda(&self, t: &Table, s: &[usize], a: usize, b: usize) -> usize {
        self.add(self.neg[s[a]], t[a][b])
    }

    pub fn table(&self, f: impl Fn(usize, usize) -> usize) -> Table {
        (0..self.n).map(|a| (0..self.n).map(|b| f(a, b)).collect()).collect()
    }

    pub fn all_maps(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        (0..n.pow(n as u32))
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let v = code % n;
                        code /= n;
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn all_tables(&self) -> impl Iterator<Item = Table> + '_ {
        let n = self.n;
        (0..n.pow((n * n) as u32)).map(move |mut code| {
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = code % n;
                            code /= n;
                            v
                        })
                        .collect()
                })
                .collect()
        })
    }

    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        self.all_maps().into_iter().filter(|m| self.endomorphism(m)).collect()
    }
}

/// A verdict line written straight to stderr, so it shows up even when the
/// test harness captures output.
pub fn verdict(name: &str, ok: bool, detail: &str) {
    let line = format!("{} {name}: {detail}\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
}
