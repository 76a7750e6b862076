use num_traits::Signed;

use crate::qpoly::{PolyStyle, Scalar};

/// Column-aligned text table (two spaces between columns).
pub fn align_table(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return String::new();
    }
    let cols = rows.iter().map(|r| r.len()).max().unwrap();
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{:<width$}  ", cell, width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// `true` for scalars rendered with more than one additive term.
fn multi_term(s: &Scalar) -> bool {
    match s {
        Scalar::Num(_) => false,
        Scalar::Sym(p) => p.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() > 1,
    }
}

fn scalar_sign_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Num(n) => n.is_negative(),
        Scalar::Sym(p) => p.leading_coeff().is_some_and(|c| c.is_negative()),
    }
}

/// Renders `constant + sum coeff*var` the way equations are displayed:
/// multi-term parts parenthesized, unit coefficients dropped, signs folded
/// into the separators, e.g. `(q^8 - q^7 + q^3) - q^3*alpha_3`.
pub fn affine_expr(constant: &Scalar, terms: &[(Scalar, String)]) -> String {
    let mut out = String::new();
    if !constant.is_zero() {
        let rendered = constant.render(PolyStyle::Expanded);
        if multi_term(constant) {
            out.push_str(&format!("({})", rendered));
        } else {
            out.push_str(&rendered);
        }
    }
    for (coeff, var) in terms {
        if coeff.is_zero() {
            continue;
        }
        let negative = scalar_sign_negative(coeff);
        let magnitude = if negative { coeff.neg() } else { coeff.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if magnitude.is_one() {
            out.push_str(var);
        } else if multi_term(&magnitude) {
            out.push_str(&format!("({})*{}", magnitude.render(PolyStyle::Expanded), var));
        } else {
            out.push_str(&format!("{}*{}", magnitude.render(PolyStyle::Expanded), var));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{QMode, QPolynomial};

    #[test]
    fn affine_expr_examples() {
        let m = QMode::Numeric(1);
        assert_eq!(
            affine_expr(
                &m.int(15),
                &[(m.int(-4), "alpha_4".into()), (m.int(-15), "alpha_5".into())]
            ),
            "15 - 4*alpha_4 - 15*alpha_5"
        );
        assert_eq!(
            affine_expr(
                &m.int(-2),
                &[(m.int(1), "alpha_4".into()), (m.int(4), "alpha_5".into())]
            ),
            "-2 + alpha_4 + 4*alpha_5"
        );
        assert_eq!(
            affine_expr(
                &m.int(0),
                &[(m.int(6), "alpha_4".into()), (m.int(20), "alpha_5".into())]
            ),
            "6*alpha_4 + 20*alpha_5"
        );

        let sym = QMode::Symbolic;
        let c = Scalar::Sym(QPolynomial::parse("q^8 - q^7 + q^3").unwrap());
        let g = Scalar::Sym(QPolynomial::parse("-q^3").unwrap());
        assert_eq!(
            affine_expr(&c, &[(g, "alpha_3".into())]),
            "(q^8 - q^7 + q^3) - q^3*alpha_3"
        );
        assert_eq!(affine_expr(&sym.zero(), &[]), "0");
    }

    #[test]
    fn table_alignment() {
        let rows = vec![
            vec!["count".into(), "s".into()],
            vec!["1".into(), "7".into()],
            vec!["11430".into(), "3".into()],
        ];
        let t = align_table(&rows);
        assert_eq!(t, "count  s\n1      7\n11430  3\n");
    }
}
