"""SE/DE Sinc-collocation and Sinc-Nystrom solvers for systems of linear
initial value problems on finite intervals."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # in-tree builds place the extension on sys.path directly
    from _core import *  # type: ignore # noqa: F401,F403
    from _core import __version__  # type: ignore # noqa: F401
