//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use crate::{Error, Result};

/// Rank of an integer matrix given as rows of equal length.
///
/// Every intermediate entry is a minor of the input, and each update divides
/// exactly by the previous pivot. All arithmetic is checked; overflow of the
/// `i128` intermediates is reported instead of wrapping.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Domain("matrix rows have different lengths".into()));
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col];
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[col];
            for j in col + 1..ncols {
                let a = pivot.checked_mul(row[j]).ok_or(Error::Overflow)?;
                let b = lead.checked_mul(pivot_row[j]).ok_or(Error::Overflow)?;
                let num = a.checked_sub(b).ok_or(Error::Overflow)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                row[j] = num / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Ok(r)
}
