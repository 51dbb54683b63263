use accelrad::Error;

pub const SUCCESS: i32 = 0;
pub const VERIFY_FAILED: i32 = 1;
pub const INPUT_ERROR: i32 = 2;
pub const NO_CONVERGENCE: i32 = 3;

pub fn code_for(e: &Error) -> i32 {
    if e.is_numerical() {
        NO_CONVERGENCE
    } else {
        INPUT_ERROR
    }
}
