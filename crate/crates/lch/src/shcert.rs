//! Symplectic homology non-vanishing certificates.
