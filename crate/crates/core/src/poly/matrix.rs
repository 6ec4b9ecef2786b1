use super::{Poly, PolyError};

/// Square matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
    symmetric: bool,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self, PolyError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(PolyError::NotSquare { rows: n, cols: bad.len() });
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        let mut m = PolyMatrix { n, entries, symmetric: false };
        m.symmetric = m.check_symmetric();
        Ok(m)
    }

    pub fn diagonal(diag: Vec<Poly>) -> Self {
        let n = diag.len();
        let mut entries = vec![Poly::zero(); n * n];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * n + i] = d;
        }
        PolyMatrix { n, entries, symmetric: true }
    }

    fn check_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Poly>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        let entries: Vec<Poly> = self.entries.iter().map(f).collect();
        let mut m = PolyMatrix { n: self.n, entries, symmetric: false };
        m.symmetric = m.check_symmetric();
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Poly {
        det_bareiss(self.rows())
    }

    /// Determinant by cofactor expansion along the first row, with
    /// memoisation over column subsets.
    pub fn det_cofactor(&self) -> Poly {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        // minors[mask] = det of the submatrix on the last popcount(mask) rows and columns `mask`
        let mut minors: Vec<Option<Poly>> = vec![None; 1 << n];
        minors[0] = Some(Poly::one());
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = n - k;
            let mut acc = Poly::zero();
            let mut sign_positive = true;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if !entry.is_zero() {
                    let sub = minors[mask & !(1 << col)].as_ref().unwrap();
                    let t = entry * sub;
                    acc = if sign_positive { acc + t } else { acc - t };
                }
                sign_positive = !sign_positive;
            }
            minors[mask] = Some(acc);
        }
        minors[(1 << n) - 1].take().unwrap()
    }
}

pub(crate) fn det_bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_divide(&prev)
                    .expect("Bareiss step is an exact division");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
