from genus4._core import *  # noqa: F401,F403
