//! Quarter-turn rotations of square grids.
//!
//! Rotation is a pure index permutation, so rotating and rotating back are
//! bit-exact inverses for any element type. One clockwise turn maps
//! `out[r][c] = in[n-1-c][r]`: the first column of the input, read bottom to
//! top, becomes the first row of the output.

use ndarray::Array2;

/// Rotate a square matrix clockwise by `quarter_turns` * 90 degrees.
///
/// `quarter_turns` is taken modulo 4; 0 returns a plain clone.
pub fn rot90cw_array<A: Clone>(a: &Array2<A>, quarter_turns: u8) -> Array2<A> {
    let n = a.nrows();
    debug_assert_eq!(n, a.ncols(), "rotation requires a square matrix");
    match quarter_turns % 4 {
        0 => a.clone(),
        1 => Array2::from_shape_fn((n, n), |(r, c)| a[(n - 1 - c, r)].clone()),
        2 => Array2::from_shape_fn((n, n), |(r, c)| a[(n - 1 - r, n - 1 - c)].clone()),
        3 => Array2::from_shape_fn((n, n), |(r, c)| a[(c, n - 1 - r)].clone()),
        _ => unreachable!(),
    }
}

/// Inverse of [`rot90cw_array`]: `quarter_turns` counter-clockwise.
pub fn rot90ccw_array<A: Clone>(a: &Array2<A>, quarter_turns: u8) -> Array2<A> {
    rot90cw_array(a, (4 - quarter_turns % 4) % 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn one_turn_matches_hand_enumeration() {
        let a = array![[1, 2, 3], [4, 5, 6], [7, 8, 9]];
        let r = rot90cw_array(&a, 1);
        assert_eq!(r, array![[7, 4, 1], [8, 5, 2], [9, 6, 3]]);
    }

    #[test]
    fn four_turns_is_identity() {
        let a = array![[1, 2], [3, 4]];
        let mut r = a.clone();
        for _ in 0..4 {
            r = rot90cw_array(&r, 1);
        }
        assert_eq!(r, a);
    }

    #[test]
    fn two_turns_composes() {
        let a = array![[1, 2, 3], [4, 5, 6], [7, 8, 9]];
        assert_eq!(
            rot90cw_array(&a, 2),
            rot90cw_array(&rot90cw_array(&a, 1), 1)
        );
        assert_eq!(
            rot90cw_array(&a, 3),
            rot90cw_array(&rot90cw_array(&a, 2), 1)
        );
    }

    #[test]
    fn ccw_inverts_cw() {
        let a = Array2::from_shape_fn((5, 5), |(r, c)| (r * 31 + c * 7) as i64);
        for q in 0..4u8 {
            assert_eq!(rot90ccw_array(&rot90cw_array(&a, q), q), a);
        }
    }
}
