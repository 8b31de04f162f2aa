//! Values exactly as printed in the worked examples, typos included.
//!
//! Column lists run bottom to top, `C_j = (S(n,j), …, S(1,j))`, listed for
//! `j = n` down to `1`. Displays are row by row.

#![allow(dead_code)]

use perioband::{DenseMatrix, Rational};

pub fn parse(v: &str) -> Rational {
    v.parse().unwrap_or_else(|e| panic!("bad literal {v:?}: {e}"))
}

fn rows(text: &[&[&str]]) -> DenseMatrix<Rational> {
    DenseMatrix::from_rows(text.iter().map(|r| r.iter().map(|v| parse(v)).collect()).collect()).unwrap()
}

/// The dense matrix whose column `j` is the printed `C_j`, read top to bottom.
fn from_lists(lists: &[&[&str]]) -> DenseMatrix<Rational> {
    let cols = lists.iter().rev().map(|l| l.iter().rev().map(|v| parse(v)).collect()).collect();
    DenseMatrix::from_columns(cols).unwrap()
}

const EX1_LISTS: &[&[&str]] = &[
    &["37/153", "-2/17", "10/153", "-8/153", "-23/153", "-7/153"],
    &["-1/153", "-5/17", "8/153", "-37/153", "-49/153", "25/153"],
    &["-40/153", "4/17", "14/153", "-103/153", "-124/153", "82/153"],
    &["14/153", "2/17", "41/153", "59/153", "74/153", "-44/153"],
    &["-2/51", "4/17", "16/51", "28/51", "4/51", "-1/51"],
    &["-2/9", "0", "-2/9", "-2/9", "1/9", "5/9"],
];

const EX1_INVERSE: &[&[&str]] = &[
    &["5/9", "-1/51", "-144/153", "82/153", "25/153", "-7/153"],
    &["1/9", "4/51", "74/153", "-124/153", "-49/153", "-23/153"],
    &["-2/9", "28/51", "59/153", "-103/153", "-37/153", "-8/153"],
    &["-2/9", "16/51", "41/153", "14/153", "8/153", "10/153"],
    &["0", "4/17", "2/17", "4/17", "-5/17", "-2/17"],
    &["-2/9", "-2/51", "14/153", "-40/153", "-1/153", "37/153"],
];

const EX1_ANTI_INVERSE: &[&[&str]] = &[
    &["-2/9", "-2/51", "14/153", "-40/153", "-1/153", "37/153"],
    &["0", "4/17", "2/17", "4/17", "-5/17", "-2/17"],
    &["-2/9", "16/51", "41/153", "14/153", "8/153", "10/153"],
    &["-2/9", "28/51", "59/153", "-103/153", "-37/153", "-8/153"],
    &["1/9", "4/51", "74/153", "-124/153", "-49/153", "-23/153"],
    &["5/9", "-1/51", "-16/17", "82/153", "25/153", "-7/153"],
];

const EX2_LISTS: &[&[&str]] = &[
    &["1545/944", "-31/59", "-553/472", "-119/236", "-33/236", "479/944", "-137/118", "153/944", "-609/472", "-199/472"],
    &["-1865/944", "21/59", "721/472", "191/236", "49/236", "-511/944", "207/118", "-313/944", "1033/472", "367/472"],
    &["-2847/1888", "53/118", "1151/944", "173/472", "163/472", "-857/1888", "337/286", "-863/1888", "1399/944", "561/944"],
    &["-1917/1888", "71/118", "589/944", "303/472", "-31/472", "-587/1888", "211/236", "-221/1888", "1509/944", "707/944"],
    &["-2331/1888", "47/118", "827/944", "169/472", "31/472", "-829/1888", "261/236", "-251/1888", "1795/944", "709/944"],
    &["-3241/1888", "37/118", "1113/944", "123/472", "165/472", "-1215/1885", "331/236", "-1001/1888", "1393/944", "759/944"],
    &["419/1888", "-33/118", "-307/944", "-81/472", "41/472", "213/1888", "-5/236", "3/1888", "-123/944", "-189/944"],
    &["-50/59", "-25/59", "23/59", "-14/59", "10/59", "5/59", "58/59", "-25/59", "44/59", "23/59"],
    &["115/944", "-13/59", "-171/472", "11/236", "9/236", "277/944", "-27/118", "323/944", "-27/472", "-53/472"],
    &["2699/1888", "53/118", "-619/944", "55/472", "-191/472", "205/1888", "-253/236", "907/1888", "-1315/944", "-501/944"],
];

const EX2_INVERSE: &[&[&str]] = &[
    &["-501/944", "53/472", "23/59", "-189/944", "759/944", "709/944", "707/944", "561/944", "367/472", "-199/472"],
    &["-1315/944", "-27/472", "44/59", "-123/944", "1393/944", "1795/944", "1509/944", "1399/944", "1033/472", "-609/472"],
    &["907/1888", "323/944", "-25/59", "3/1888", "-1001/1888", "-251/1888", "-221/1888", "-863/1888", "-313/944", "153/944"],
    &["-253/236", "-27/118", "58/59", "-5/236", "331/236", "261/236", "211/236", "337/236", "207/118", "-237/118"],
    &["205/118", "277/944", "-5/59", "213/1888", "-1215/1888", "-829/1888", "-587/1888", "-857/1888", "-511/944", "479/944"],
    &["-191/472", "9/236", "10/59", "41/472", "165/472", "31/472", "-31/472", "163/472", "49/236", "-33/236"],
    &["55/472", "11/236", "-14/59", "-81/472", "123/472", "169/472", "303/472", "173/472", "191/236", "-119/236"],
    &["-619/944", "-171/472", "23/59", "-307/944", "1113/944", "827/944", "589/944", "1151/944", "721/472", "-553/472"],
    &["53/118", "-13/59", "-25/59", "-33/118", "37/118", "47/118", "71/118", "53/118", "21/59", "-31/59"],
    &["2699/1888", "115/944", "-50/59", "419/1888", "-3241/1888", "-2331/1888", "-1917/1888", "-2847/1888", "-1865/944", "1545/944"],
];

const EX2_ANTI_INVERSE: &[&[&str]] = &[
    &["2699/1888", "115/944", "-50/59", "419/1888", "-3241/1888", "-2331/1888", "-1917/1888", "-2847/1888", "-1865/944", "1545/944"],
    &["53/118", "-13/59", "-25/59", "-33/118", "37/118", "47/118", "71/118", "53/118", "21/59", "-31/59"],
    &["-619/944", "-171/472", "23/59", "-307/944", "1113/944", "827/944", "589/944", "1151/944", "721/472", "-553/472"],
    &["55/472", "11/236", "-14/59", "-81/472", "123/472", "169/472", "303/472", "173/472", "191/236", "-119/236"],
    &["-191/472", "9/236", "10/59", "41/472", "165/472", "31/472", "-31/472", "163/472", "49/236", "-33/236"],
    &["205/118", "277/944", "-5/59", "213/1888", "-1215/1888", "-829/1888", "-587/1888", "-857/1888", "-511/944", "479/944"],
    &["-253/236", "-27/118", "58/59", "-5/236", "331/236", "261/236", "211/236", "337/236", "207/118", "-237/118"],
    &["907/1888", "323/944", "-25/59", "3/1888", "-1001/1888", "-251/1888", "-221/1888", "-863/1888", "-313/944", "153/944"],
    &["-1315/944", "-27/472", "44/59", "-123/944", "1393/944", "1795/944", "1509/944", "1399/944", "1033/472", "-609/472"],
    &["-501/944", "53/472", "23/59", "-189/944", "759/944", "709/944", "707/944", "561/944", "367/472", "-199/472"],
];

/// Printed column lists of the example 1 inverse, as a matrix.
pub fn ex1_lists() -> DenseMatrix<Rational> {
    from_lists(EX1_LISTS)
}

pub fn ex1_inverse() -> DenseMatrix<Rational> {
    rows(EX1_INVERSE)
}

pub fn ex1_anti_inverse() -> DenseMatrix<Rational> {
    rows(EX1_ANTI_INVERSE)
}

pub fn ex2_lists() -> DenseMatrix<Rational> {
    from_lists(EX2_LISTS)
}

pub fn ex2_inverse() -> DenseMatrix<Rational> {
    rows(EX2_INVERSE)
}

pub fn ex2_anti_inverse() -> DenseMatrix<Rational> {
    rows(EX2_ANTI_INVERSE)
}

/// Printed `(z_1 … z_6)` of the pentadiagonal system.
pub const EX3_Z: [&str; 6] = ["3", "-7", "12/5", "-9", "-5", "-4/3"];

/// 1-based positions where two printed versions of the same matrix differ.
pub fn differences(a: &DenseMatrix<Rational>, b: &DenseMatrix<Rational>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            if a.get(i, j).unwrap() != b.get(i, j).unwrap() {
                out.push((i, j));
            }
        }
    }
    out
}
