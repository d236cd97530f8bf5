import logging
from configparser import ConfigParser, Error as ConfigParserError

from .errors import ConfigError

log = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = '/etc/primexp.conf'

DEFAULTS = {
    'verify': {
        'jobs': '1',
        'block_size': '256',
        'cycle_cap': '1000000',
        'out_dir': '.',
    },
    'statsd': {
        'enabled': 'false',
        'host': 'localhost',
        'port': '8125',
        'prefix': 'primexp',
        'include_hostname': 'false',
    },
    'logging': {
        'level': 'WARNING',
    },
}


def get_config(config_file=DEFAULT_CONFIG_FILE):
    """Read an INI file into {section: {key: value}} on top of DEFAULTS.

    A missing file leaves the defaults in place; a malformed one raises
    ConfigError.
    """
    config = dict((section, dict(values)) for section, values in DEFAULTS.items())
    if not config_file:
        return config

    cnf = ConfigParser()
    try:
        found = cnf.read(config_file)
    except (ConfigParserError, UnicodeDecodeError) as ex:
        raise ConfigError('cannot parse {0}: {1}'.format(config_file, ex))
    if not found:
        log.debug('no config file at %s, using defaults', config_file)
        return config

    for section in cnf.sections():
        config.setdefault(section, {})
        for key, value in cnf.items(section):
            config[section][key] = value
    return config


def get_int(config, section, key):
    value = config.get(section, {}).get(key, DEFAULTS.get(section, {}).get(key))
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError('[{0}] {1} = {2!r} is not an integer'.format(section, key, value))
