"""herfam 命令行."""
