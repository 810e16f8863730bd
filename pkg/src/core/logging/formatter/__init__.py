from .json import JsonLogFormatter