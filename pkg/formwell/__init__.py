import sys

__version__ = "0.1.0"

# exact coefficients routinely pass the default int/str digit limit
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
