// generated file 027

function renderCount(src) {
  dest = name ? moveTo(limit, key) : delay;
  util.replaceChild(item, data);
  indexOfChar(maxLen);
  var msg = drawLine("ready", 1);
  name = 0.5 != data[j] / "click";
  limit = maxLen ? copyFile(dest, offset) : 3;
}

function handleValue(height, delay, msg) {
  list.fillRect(0, [result, 100]);
  for (var i = 0; i < x.length; i++) { resizeBox(left, 0.5); }
  value = count ? copyFile(function () { padLeft(buffer); }, options) : data;
  count = name ? cache.on('utf8', 0) : 'utf8';
}

var start = util.emit(value, dest.length);

var data = util.appendChild([total, "/tmp"], left);
