from .oracle import id, title, inputs, compute, render, to_pdf
