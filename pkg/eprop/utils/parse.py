from fractions import Fraction

import configargparse as cfargparse

from eprop.space import str2builder


def parse_number(text):
    """``"1/6"``, ``"0.25"`` or ``"3"`` as an exact Fraction."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError("not a number: %r" % (text,))


class ArgumentParser(cfargparse.ArgumentParser):
    def __init__(
            self,
            config_file_parser_class=cfargparse.YAMLConfigFileParser,
            formatter_class=cfargparse.ArgumentDefaultsHelpFormatter,
            **kwargs):
        super(ArgumentParser, self).__init__(
            config_file_parser_class=config_file_parser_class,
            formatter_class=formatter_class,
            **kwargs)

    @classmethod
    def defaults(cls, *args):
        """Get default arguments added to a parser by all ``*args``."""
        dummy_parser = cls()
        for callback in args:
            callback(dummy_parser)
        defaults = dummy_parser.parse_known_args([])[0]
        return defaults

    @classmethod
    def validate_model_opts(cls, opt):
        if opt.model in str2builder:
            if opt.model == "example1" and opt.m_max < 2:
                raise ValueError("-m_max must be at least 2")
            if opt.model == "halfmap" and opt.halfmap_depth < 1:
                raise ValueError("-halfmap_depth must be at least 1")

    @classmethod
    def validate_probe_opts(cls, opt):
        if opt.horizon < 1:
            raise ValueError("-horizon must be at least 1, got %d"
                             % opt.horizon)
        if opt.tail_start > opt.horizon:
            raise ValueError("-tail_start %d exceeds -horizon %d"
                             % (opt.tail_start, opt.horizon))
        if getattr(opt, "tol", 1.0) <= 0:
            raise ValueError("-tol must be positive")

    @classmethod
    def validate_diagnose_opts(cls, opt):
        cls.validate_model_opts(opt)
        cls.validate_probe_opts(opt)
        if opt.profile in ("eproperty", "cesaro", "liminf-ball") \
                and opt.z is None:
            raise ValueError("-profile %s requires -z" % opt.profile)
        if opt.profile == "liminf-ball" and opt.r is None:
            raise ValueError("-profile liminf-ball requires -r")
        if opt.profile == "lemma-ball" and opt.eps <= 0:
            raise ValueError("-eps must be positive")

    @classmethod
    def validate_decompose_opts(cls, opt):
        cls.validate_model_opts(opt)
        cls.validate_probe_opts(opt)
        if opt.n_search < 1:
            raise ValueError("-n_search must be at least 1")
        if opt.k is not None and opt.k < 1:
            raise ValueError("-k must be at least 1")
        if opt.extra_steps < 0:
            raise ValueError("-extra_steps must be nonnegative")
        if opt.eps <= 0:
            raise ValueError("-eps must be positive")

    @classmethod
    def validate_stability_opts(cls, opt):
        cls.validate_model_opts(opt)
        if opt.n_max < 0:
            raise ValueError("-n_max must be nonnegative")
        if opt.tol <= 0:
            raise ValueError("-tol must be positive")
