//! Machine-readable report fragments. Exact integers are emitted as JSON
//! numbers inside the 53-bit range and as decimal strings beyond it, so
//! double-based consumers never lose digits.

use num::bigint::BigInt;
use num::traits::Signed;
use serde_json::Value;

/// Threshold above which integers become decimal strings: 2^53.
fn doubles_limit() -> BigInt {
    BigInt::from(1i64 << 53)
}

/// One integer under the magnitude policy.
pub fn bigint_to_json(v: &BigInt) -> Value {
    if v.abs() < doubles_limit() {
        // fits i64 a fortiori
        Value::from(i64::try_from(v).expect("|v| < 2^53 fits in i64"))
    } else {
        Value::from(v.to_string())
    }
}

/// A sequence of integers under the magnitude policy.
pub fn bigint_slice_to_json(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(bigint_to_json).collect())
}
