from ._logcy import *  # noqa: F401,F403
