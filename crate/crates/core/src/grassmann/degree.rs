use super::GrassmannError;

/// Degree of Gr(k, n) under Plücker: the number of standard Young tableaux
/// of the k × (n − k) rectangle, by the hook-length formula.
pub fn grassmann_degree(k: usize, n: usize) -> Result<u128, GrassmannError> {
    if k < 1 || k >= n || n > 8 {
        return Err(GrassmannError::OutOfRange { k, n });
    }
    let (rows, cols) = (k, n - k);
    let cells = (rows * cols) as u128;
    let factorial: u128 = (1..=cells).product();
    let hooks: u128 = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| ((rows - i) + (cols - j) - 1) as u128))
        .product();
    Ok(factorial / hooks)
}

/// Degree of the locus of planes tangent to the quadric: a quintic section
/// of Gr(3, 5).
pub fn deg_fq() -> u128 {
    5 * grassmann_degree(3, 5).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_spaces_have_degree_one() {
        for n in 2..=8 {
            assert_eq!(grassmann_degree(1, n).unwrap(), 1);
            assert_eq!(grassmann_degree(n - 1, n).unwrap(), 1);
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(grassmann_degree(2, 4).unwrap(), 2);
        assert_eq!(grassmann_degree(3, 5).unwrap(), 5);
        assert_eq!(grassmann_degree(2, 6).unwrap(), 14);
        assert_eq!(grassmann_degree(4, 8).unwrap(), 24024);
        assert_eq!(deg_fq(), 25);
    }

    #[test]
    fn out_of_range() {
        for (k, n) in [(0, 4), (4, 4), (5, 4), (2, 9)] {
            assert_eq!(grassmann_degree(k, n), Err(GrassmannError::OutOfRange { k, n }));
        }
    }
}
