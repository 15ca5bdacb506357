""" Report manager utility """
import csv
import io
import json
import os

from eprop.utils.logging import logger


def build_report_manager(opt):
    if opt.tensorboard:
        from tensorboardX import SummaryWriter
        writer = SummaryWriter(opt.tensorboard_log_dir, comment="eprop")
    else:
        writer = None

    return ReportMgr(opt.out, opt.format, tensorboard_writer=writer)


class ReportMgr(object):
    def __init__(self, out_dir, fmt="csv", tensorboard_writer=None):
        """
        Writes diagnostic reports as CSV or JSON files and (optionally)
        stability traces to TensorBoard.

        Args:
            out_dir(str): directory receiving the files, None to only log
            fmt(str): ``csv`` or ``json``
            tensorboard_writer(:obj:`tensorboardX.SummaryWriter`):
                The TensorBoard Summary writer to use or None
        """
        if fmt not in ("csv", "json"):
            raise ValueError("unknown report format %r" % (fmt,))
        self.out_dir = out_dir
        self.fmt = fmt
        self.tensorboard_writer = tensorboard_writer
        self.written = []

    def log(self, *args, **kwargs):
        logger.info(*args, **kwargs)

    def _path(self, name, ext):
        if not os.path.isdir(self.out_dir):
            os.makedirs(self.out_dir)
        return os.path.join(self.out_dir, "%s.%s" % (name, ext))

    def report(self, name, report):
        """Write ``report`` as ``<out>/<name>.<fmt>``; returns the path."""
        self.log(report.summary())
        for note in report.notes:
            self.log("  note: %s" % note)
        self.maybe_log_tensorboard(name, report)
        if self.out_dir is None:
            return None
        if self.fmt == "json":
            return self.write_json(name, report.to_json())
        path = self._path(name, "csv")
        with io.open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerows(report.to_csv_rows())
        self.written.append(path)
        return path

    def write_json(self, name, document):
        """Dump ``document`` with sorted keys, whatever the format."""
        if self.out_dir is None:
            return None
        path = self._path(name, "json")
        with io.open(path, "w", encoding="utf-8") as f:
            f.write(json.dumps(document, sort_keys=True, indent=2,
                               ensure_ascii=False))
            f.write(u"\n")
        self.written.append(path)
        return path

    def maybe_log_tensorboard(self, name, report):
        if self.tensorboard_writer is None:
            return
        if "flat_distance" in report.columns:
            for n, d in zip(report.column("n"),
                            report.column("flat_distance")):
                self.tensorboard_writer.add_scalar(
                    "%s/flat_distance" % name, d, n)
        elif "gap" in report.columns and "distance" in report.columns:
            for i, g in enumerate(report.gaps):
                self.tensorboard_writer.add_scalar("%s/gap" % name, g, i)

    def close(self):
        if self.tensorboard_writer is not None:
            self.tensorboard_writer.close()
