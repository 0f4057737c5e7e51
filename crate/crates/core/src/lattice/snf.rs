//! Smith normal form over the integers with transformation matrices.

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Result of [`smith_normal_form`]: `left * a * right = diag(diagonal)`,
/// with `left` and `right` unimodular and each diagonal entry dividing the
/// next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

fn swap_rows(m: &mut IntMatrix, i: usize, j: usize) {
    m.swap(i, j);
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i += k * row_j
fn add_row(m: &mut IntMatrix, i: usize, j: usize, k: i64) {
    if k == 0 {
        return;
    }
    let src = m[j].clone();
    for (a, b) in m[i].iter_mut().zip(src) {
        *a += k * b;
    }
}

/// col_i += k * col_j
fn add_col(m: &mut IntMatrix, i: usize, j: usize, k: i64) {
    if k == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[i] += k * row[j];
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for a in m[i].iter_mut() {
        *a = -*a;
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let n = a.len();
    let mut m = a.clone();
    let mut left = identity(n);
    let mut right = identity(n);

    for t in 0..n {
        loop {
            // pivot: smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            swap_rows(&mut m, t, pi);
            swap_rows(&mut left, t, pi);
            swap_cols(&mut m, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            for i in t + 1..n {
                let q = m[i][t].div_euclid(m[t][t]);
                add_row(&mut m, i, t, -q);
                add_row(&mut left, i, t, -q);
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = m[t][j].div_euclid(m[t][t]);
                add_col(&mut m, j, t, -q);
                add_col(&mut right, j, t, -q);
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let p = m[t][t];
            let offender = (t + 1..n).find(|&i| (t + 1..n).any(|j| m[i][j] % p != 0));
            match offender {
                Some(i) => {
                    add_row(&mut m, t, i, 1);
                    add_row(&mut left, t, i, 1);
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            negate_row(&mut m, t);
            negate_row(&mut left, t);
        }
    }
    Smith {
        diagonal: (0..n).map(|i| m[i][i]).collect(),
        left,
        right,
    }
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let p = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: IntMatrix, expected: &[i64]) {
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal, expected);
        let d = mat_mul(&mat_mul(&s.left, &a), &s.right);
        for (i, row) in d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { s.diagonal[i] } else { 0 });
            }
        }
    }

    #[test]
    fn small_cases() {
        check(vec![vec![2]], &[2]);
        check(vec![vec![2, 1], vec![1, 4]], &[1, 7]);
        check(vec![vec![2, 0], vec![0, 4]], &[2, 4]);
        check(vec![vec![2, 0], vec![0, 10]], &[2, 10]);
        check(vec![vec![4, 0], vec![0, 6]], &[2, 12]);
        check(vec![vec![0, 1], vec![1, 0]], &[1, 1]);
    }

    #[test]
    fn divisibility_chain() {
        let a = vec![vec![6, 4, 2], vec![4, 8, 0], vec![2, 0, 10]];
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal.iter().product::<i64>(), 288);
        assert!(s.diagonal.windows(2).all(|w| w[1] % w[0] == 0));
        assert_eq!(s.diagonal[0], 2);
    }
}
