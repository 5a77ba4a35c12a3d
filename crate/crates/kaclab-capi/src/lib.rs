#[no_mangle]
pub extern "C" fn kaclab_placeholder() -> u64 { kaclab::coeff::placeholder() }
