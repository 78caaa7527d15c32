
# Static version information. Bumped by hand on release.

_VERSION = '0.1.0'
_REVISION = 'unknown'


def get_versions():
    return {'version': _VERSION,
            'full-revisionid': _REVISION,
            'dirty': False,
            'error': None,
            'date': None}
