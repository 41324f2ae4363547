from formwell.core.numeric.finite_diff import (
    RealPoint,
    check_dalembert,
    check_laplacian,
    check_wirtinger,
    fd_dalembert,
    fd_laplacian,
    fd_partial,
)

__all__ = [
    "RealPoint",
    "check_dalembert",
    "check_laplacian",
    "check_wirtinger",
    "fd_dalembert",
    "fd_laplacian",
    "fd_partial",
]
