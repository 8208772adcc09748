from .triples import id, title, inputs, compute, render, to_pdf
