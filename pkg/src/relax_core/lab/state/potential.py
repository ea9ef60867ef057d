"""Pointwise internal energy density and its derivatives."""

import numpy as np
from scipy.special import kl_div, xlogy


def pressure(rho: np.ndarray, gamma: float) -> np.ndarray:
    """``p(rho) = rho^gamma``; negative undershoots count as vacuum."""
    if gamma == 1:
        return rho
    return np.power(np.maximum(rho, 0.0), gamma)


def internal_density(rho: np.ndarray, gamma: float) -> np.ndarray:
    """``U(rho) = rho ln rho`` for gamma = 1, else ``rho^gamma / (gamma - 1)``."""
    rho = np.maximum(rho, 0.0)
    if gamma == 1:
        return xlogy(rho, rho)
    return np.power(rho, gamma) / (gamma - 1)


def internal_derivative(rho: np.ndarray, gamma: float) -> np.ndarray:
    """``U'(rho)``. Callers guard the logarithm against vacuum."""
    if gamma == 1:
        return np.log(rho) + 1.0
    return gamma / (gamma - 1) * np.power(np.maximum(rho, 0.0), gamma - 1)


def relative_internal_density(rho: np.ndarray, rho_bar: np.ndarray, gamma: float) -> np.ndarray:
    """``U(rho | rho_bar) = U(rho) - U(rho_bar) - U'(rho_bar)(rho - rho_bar)``."""
    if gamma == 1:
        return kl_div(rho, rho_bar)
    rho = np.maximum(rho, 0.0)
    return (
        np.power(rho, gamma) - np.power(rho_bar, gamma) - gamma * np.power(rho_bar, gamma - 1) * (rho - rho_bar)
    ) / (gamma - 1)


def relative_internal_lower_bound(rho: np.ndarray, rho_bar: np.ndarray, gamma: float) -> np.ndarray:
    """``(gamma/2) min(rho^{gamma-2}, rho_bar^{gamma-2}) |rho - rho_bar|^2``."""
    weight = np.minimum(np.power(rho, gamma - 2), np.power(rho_bar, gamma - 2))
    return gamma / 2 * weight * (rho - rho_bar) ** 2
