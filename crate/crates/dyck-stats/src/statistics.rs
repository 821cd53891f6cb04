//! The three classical Dyck-path statistics: area, bounce and dinv.

use dyck_core::{DyckWord, Step};

/// Total area: the number of whole cells between the path and the
/// diagonal, i.e. the sum of the area sequence.
pub fn area(word: &DyckWord) -> u32 {
    word.area_sequence().sum()
}

/// Bounce statistic.
///
/// The bounce path starts on the diagonal at `j = 0`; from `(j, j)` it
/// moves north to the height `h` reached by the word before its
/// `(j + 1)`-th down-step, then east back to the diagonal at `j = h`.
/// `bounce` is the sum of `n - j` over every intermediate diagonal touch
/// point, so the staircase scores `n(n-1)/2` and the pyramid 0.
pub fn bounce(word: &DyckWord) -> u32 {
    let n = word.semilength();
    // ups_before_down[k]: up-steps preceding the (k + 1)-th down-step
    let mut ups_before_down = Vec::with_capacity(n);
    let mut ups = 0u32;
    for step in word.steps() {
        match step {
            Step::Up => ups += 1,
            Step::Down => ups_before_down.push(ups),
        }
    }
    let mut total = 0u32;
    let mut j = 0usize;
    while j < n {
        j = ups_before_down[j] as usize;
        if j < n {
            total += (n - j) as u32;
        }
    }
    total
}

/// Dinv statistic: with area sequence `a`, the number of pairs `i < j`
/// with `a_i = a_j` plus the number with `a_i = a_j + 1`.
pub fn dinv(word: &DyckWord) -> u32 {
    let seq = word.area_sequence();
    let rows = seq.rows();
    let mut count = 0u32;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i] == rows[j] || rows[i] == rows[j] + 1 {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> DyckWord {
        DyckWord::parse(text).unwrap()
    }

    #[test]
    fn area_examples() {
        assert_eq!(area(&w("1010")), 0);
        assert_eq!(area(&w("1100")), 1);
        assert_eq!(area(&w("1110101100011000")), 13);
    }

    #[test]
    fn area_matches_level_sum_route() {
        // sum of post-step levels = 2 * area + n
        for n in 1..=8 {
            for word in dyck_core::enumerate(n).unwrap().iter() {
                let level_sum: i32 = word.levels().as_slice().iter().sum();
                assert_eq!(level_sum as u32, 2 * area(&word) + n as u32, "{word}");
            }
        }
    }

    #[test]
    fn bounce_examples() {
        assert_eq!(bounce(&w("1010")), 1);
        assert_eq!(bounce(&w("1100")), 0);
        assert_eq!(bounce(&w("101010")), 3);
        assert_eq!(bounce(&w("1110101100011000")), 7);
    }

    #[test]
    fn dinv_examples() {
        assert_eq!(dinv(&w("1100")), 0);
        assert_eq!(dinv(&w("1010")), 1);
        // a = (0, 1, 1): one equal pair, no off-by-one pair
        assert_eq!(dinv(&w("110100")), 1);
        assert_eq!(dinv(&w("1110101100011000")), 11);
    }

    #[test]
    fn extremal_paths() {
        for n in 1..=10u32 {
            let full_square: String = "1".repeat(n as usize) + &"0".repeat(n as usize);
            let staircase: String = "10".repeat(n as usize);
            let square = w(&full_square);
            let stairs = w(&staircase);
            let bound = n * (n - 1) / 2;
            assert_eq!((area(&square), bounce(&square)), (bound, 0));
            assert_eq!((area(&stairs), bounce(&stairs)), (0, bound));
        }
    }

    #[test]
    fn statistics_stay_within_the_triangle_bound() {
        for n in 1..=8u32 {
            let bound = n * (n - 1) / 2;
            for word in dyck_core::enumerate(n as usize).unwrap().iter() {
                assert!(area(&word) <= bound, "{word}");
                assert!(bounce(&word) <= bound, "{word}");
            }
        }
    }
}
