"""Static checking of JDBC getter and setter calls against a SQL schema."""

__version__ = "0.1.0"
