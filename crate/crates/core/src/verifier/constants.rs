use super::lemmas::beta_a5;
use super::report::{check_le, CheckPoint, CheckReport, Status};
use super::VerifyError;
use crate::catalog::group_record;
use crate::estimates::f_at;
use crate::exactnum::exact::pow_u64;
use crate::exactnum::{eval_interval, BoundExpr, CompareOptions};

pub const CONSTANT_IDS: &[&str] = &["f248", "beta", "alpha_log3"];

/// Certify one printed constant bound.
pub fn check_constant(id: &str) -> Result<CheckReport, VerifyError> {
    let opts = CompareOptions::from_env();
    let d = BoundExpr::decimal;
    let report = match id.trim().to_ascii_lowercase().as_str() {
        "f248" => CheckReport::new(
            "f248",
            "f(248) against 1.5e33",
            vec![check_le("f(248) <= 1.5e33".into(), &f_at(248), &BoundExpr::big(&(pow_u64(10, 32) * 15u32)), &opts)],
        ),
        "beta" => {
            let co1 = BoundExpr::big(&group_record(".1")?.order);
            let beta = co1.ln().div(&BoundExpr::int(24).ln()).sub(&BoundExpr::int(2).mul(&BoundExpr::int(24).log2()));
            let mut points = vec![check_le("log_24 |.1| - 2 log 24 <= 4.32".into(), &beta, &d("4.32"), &opts)];
            points.push(enclosure("beta", &beta));
            CheckReport::new("beta", "exact order of .1", points)
        }
        "alpha_log3" => {
            let b = beta_a5();
            let mut points = vec![
                check_le("0.29248125 <= (log 3 - 1)/2".into(), &d("0.29248125"), &b, &opts),
                check_le("(log 3 - 1)/2 <= 0.29248126".into(), &b, &d("0.29248126"), &opts),
            ];
            points.push(enclosure("(log 3 - 1)/2", &b));
            CheckReport::new("alpha_log3", "open interval (0.29248125, 0.29248126)", points)
        }
        _ => return Err(VerifyError::UnknownConstant(id.to_string())),
    };
    Ok(report)
}

fn enclosure(label: &str, e: &BoundExpr) -> CheckPoint {
    let p = CheckPoint::new(format!("{label} enclosure"), Status::Info);
    match eval_interval(e, 1, 128) {
        Ok(iv) => p.note(iv.to_string()),
        Err(err) => p.note(err.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_constants_certify() {
        for id in CONSTANT_IDS {
            let r = check_constant(id).unwrap();
            assert!(r.is_clean(), "{}", r.to_text());
            assert!(r.summary.pass >= 1);
        }
        assert!(check_constant("gamma").is_err());
    }
}
