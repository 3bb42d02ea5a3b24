"""Operations over set functions, distributions and independence relations."""
