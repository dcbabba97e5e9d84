//! C ABI; filled in after the core library.
