pub fn placeholder() -> u32 { 2 }
