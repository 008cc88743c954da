use std::fmt;

use num_integer::Integer;

use super::DiagramError;

/// A generalized Cartan matrix `(a_ij)`.
///
/// Entries are stored row-major; indices are 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates a square integer matrix as a generalized Cartan matrix.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, DiagramError> {
        let size = rows.len();
        if size == 0 {
            return Err(DiagramError::Empty);
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != size) {
            return Err(DiagramError::NotSquare { row: bad + 1 });
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let m = CartanMatrix { size, entries };
        m.check()?;
        Ok(m)
    }

    /// The rank-`s` matrix with no edges.
    pub fn diagonal(size: usize) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 2;
        }
        CartanMatrix { size, entries }
    }

    fn check(&self) -> Result<(), DiagramError> {
        let s = self.size;
        for i in 0..s {
            if self.get(i, i) != 2 {
                return Err(DiagramError::DiagonalNotTwo {
                    i: i + 1,
                    value: self.get(i, i),
                });
            }
        }
        for i in 0..s {
            for j in 0..s {
                if i == j {
                    continue;
                }
                let a = self.get(i, j);
                if a > 0 {
                    return Err(DiagramError::PositiveOffDiagonal {
                        i: i + 1,
                        j: j + 1,
                        value: a,
                    });
                }
                if (a == 0) != (self.get(j, i) == 0) {
                    return Err(DiagramError::ZeroAsymmetry { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Principal submatrix on `vertices`, in the given order.
    pub fn submatrix(&self, vertices: &[usize]) -> CartanMatrix {
        let n = vertices.len();
        let mut entries = Vec::with_capacity(n * n);
        for &i in vertices {
            for &j in vertices {
                entries.push(self.get(i, j));
            }
        }
        CartanMatrix { size: n, entries }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(parts: &[&CartanMatrix]) -> CartanMatrix {
        let size: usize = parts.iter().map(|p| p.size).sum();
        let mut entries = vec![0; size * size];
        let mut offset = 0;
        for p in parts {
            for i in 0..p.size {
                for j in 0..p.size {
                    entries[(offset + i) * size + offset + j] = p.get(i, j);
                }
            }
            offset += p.size;
        }
        CartanMatrix { size, entries }
    }

    /// Neighbours of `i` in the undotted diagram, ascending.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&j| j != i && self.get(i, j) != 0)
    }

    /// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`, if they exist.
    pub fn symmetrizer(&self) -> Option<Vec<i64>> {
        let s = self.size;
        // rational d_i as (num, den), fixed to 1 at the root of every component
        let mut d: Vec<Option<(i64, i64)>> = vec![None; s];
        for root in 0..s {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some((1, 1));
            let mut stack = vec![root];
            while let Some(i) = stack.pop() {
                let (ni, di) = d[i].unwrap();
                for j in self.neighbours(i).collect::<Vec<_>>() {
                    // d_j = d_i a_ij / a_ji
                    let num = ni * self.get(i, j);
                    let den = di * self.get(j, i);
                    let g = num.gcd(&den);
                    let (num, den) = if den / g < 0 {
                        (-num / g, -den / g)
                    } else {
                        (num / g, den / g)
                    };
                    match d[j] {
                        None => {
                            d[j] = Some((num, den));
                            stack.push(j);
                        }
                        Some((nj, dj)) => {
                            if nj * den != num * dj {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        let lcm_den = d.iter().fold(1i64, |acc, x| acc.lcm(&x.unwrap().1));
        let mut out: Vec<i64> = d
            .iter()
            .map(|x| {
                let (n, dd) = x.unwrap();
                n * (lcm_den / dd)
            })
            .collect();
        let g = out.iter().fold(0i64, |acc, x| acc.gcd(x));
        for x in &mut out {
            *x /= g;
        }
        Some(out)
    }

    /// Exact determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> i128 {
        let n = self.size;
        let mut m: Vec<Vec<i128>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.size) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
