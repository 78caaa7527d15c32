##                  _       _
##  _ __ ___   __ _| |_ ___| |__   ___ _____   _____ _ __
## | '_ ` _ \ / _` | __/ __| '_ \ / __/ _ \ \ / / _ \ '__|
## | | | | | | (_| | || (__| | | | (_| (_) \ V /  __/ |
## |_| |_| |_|\__,_|\__\___|_| |_|\___\___/ \_/ \___|_|
##
## Matching covers, streaming and fully dynamic matching
## Copyright 2024 - 2026
##

"""
mcio contains helper functions for reporting information.

Everything goes to stderr; stdout is kept for reports written by the command
line.

"""

import sys

FRILLS = "<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@<>@"


def _emit(line):
    print(line, file=sys.stderr)


def warning_message(msg, with_frills=False):
    if with_frills:
        _emit(FRILLS)

    _emit("")
    _emit("WARNING: %s" % (msg))
    _emit("")
    if with_frills:
        _emit(FRILLS)


def exception_message(msg, exception, with_frills=False, raise_exception=True):

    if with_frills:
        _emit("\n" + FRILLS)

    _emit("")
    _emit("ERROR: %s" % (msg))
    _emit("")
    if with_frills:
        _emit(FRILLS)

    if raise_exception:
        raise exception


def debug_message(msg):
    _emit("")
    _emit("DEBUG: %s" % (msg))
    _emit("")


def status_message(msg, verbose):
    if verbose:
        _emit("STATUS: %s" % (msg))
